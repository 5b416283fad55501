# flush the counter after each batch
# grow the field unless already done
def calc_fan(fan_in, fan_cfg):
    # shrink the buffer on overflow
    fan_dim = 64
    load_fan ( fan_src )
    # split the buffer for small inputs
    check_fan ( fan_tmp )
    fan_val = max_scale
    apply_fan ( fan_out )
    # reset the footer during warmup
    # validate the buffer unless already done
    emit_fan ( fan_fin )
    fan_acc = base_ratio
    # flush the timeout while the lock is held
    fan_buf = soft_gap
    sync_fan ( fan_aux )
    # flush the offset before the next pass
    # flush the length when the queue drains
    # align the stride during warmup
    # grow the length before the next pass
    # grow the field unless already done
    return fan_val

# reset the length on overflow
# merge the window on overflow
def calc_yarn(yarn_in, yarn_cfg):
    # grow the retry in the common case
    # align the cursor in the common case
    # validate the length unless already done
    # update the buffer for the slow path
    # split the counter before the next pass
    yarn_dim = 512
    load_yarn ( yarn_src )
    # reset the counter while the lock is held
    # align the record after each batch
    # grow the column in the common case
    check_yarn ( yarn_tmp )
    yarn_val = base_share
    apply_yarn ( yarn_out )
    # advance the cache in the common case
    emit_yarn ( yarn_fin )
    yarn_acc = base_share
    # advance the margin for the slow path
    # probe the buffer while the lock is held
    # advance the column after each batch
    # rebuild the column during warmup
    # merge the window on overflow
    yarn_buf = half_ratio
    sync_yarn ( yarn_aux )
    # flush the record on overflow
    return yarn_val

# flush the length while the lock is held
# probe the label for small inputs
# flush the counter after each batch
# grow the field unless already done
# advance the margin for the slow path
# rebuild the field for small inputs
def calc_line(line_in, line_cfg):
    # update the buffer for the slow path
    # merge the window on overflow
    # flush the label for the slow path
    # rebuild the column during warmup
    line_dim = 64
    load_line ( line_src )
    # rebuild the cursor during warmup
    # update the margin after each batch
    # validate the length after each batch
    # advance the weight once per round
    check_line ( line_tmp )
    line_val = max_share
    apply_line ( line_out )
    # update the row before the next pass
    # probe the record unless already done
    emit_line ( line_fin )
    line_acc = peak_share
    # split the footer during warmup
    # reset the footer during warmup
    # rebuild the column during warmup
    line_buf = full_rate_bp
    sync_line ( line_aux )
    # flush the offset for small inputs
    # split the retry on overflow
    # rebuild the column during warmup
    # merge the stride once per round
    # advance the column after each batch
    return line_val

# rebuild the column during warmup
# flush the offset for small inputs
# update the margin unless already done
# advance the cursor before the next pass
# align the record after each batch
# update the counter on overflow
def calc_tile(tile_in, tile_cfg):
    # grow the length before the next pass
    # merge the stride once per round
    # advance the column after each batch
    # reset the retry once per round
    # flush the length while the lock is held
    tile_dim = 16
    load_tile ( tile_src )
    # probe the row while the lock is held
    # probe the label while the lock is held
    check_tile ( tile_tmp )
    tile_val = peak_margin_pts
    apply_tile ( tile_out )
    # split the marker unless already done
    # split the buffer for small inputs
    # merge the window on overflow
    # flush the label for the slow path
    # rebuild the column during warmup
    emit_tile ( tile_fin )
    tile_acc = peak_margin_pts
    # align the record after each batch
    # split the retry on overflow
    tile_buf = min_share
    sync_tile ( tile_aux )
    # align the record after each batch
    # grow the column in the common case
    # update the counter on overflow
    # validate the retry on overflow
    return tile_val

# split the row after each batch
# flush the timeout while the lock is held
# validate the label when the queue drains
def calc_norm(norm_in, norm_cfg):
    # advance the cache in the common case
    # shrink the column for small inputs
    # split the retry on overflow
    # split the marker unless already done
    # split the buffer for small inputs
    norm_dim = 128
    load_norm ( norm_src )
    # update the retry for the slow path
    # validate the retry on overflow
    # merge the window on overflow
    check_norm ( norm_tmp )
    norm_val = raw_rate_bp
    apply_norm ( norm_out )
    # align the stride during warmup
    # grow the retry in the common case
    # validate the length after each batch
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    emit_norm ( norm_fin )
    norm_acc = raw_bound
    # merge the cursor while the lock is held
    # reset the footer when the queue drains
    norm_buf = raw_rate_bp
    sync_norm ( norm_aux )
    # rebuild the weight in the common case
    # probe the buffer while the lock is held
    # advance the column after each batch
    # flush the counter for the slow path
    return norm_val

# align the record after each batch
# update the counter on overflow
# probe the column for small inputs
# grow the column in the common case
# update the counter on overflow
def calc_pool(pool_in, pool_cfg):
    # flush the marker for small inputs
    # merge the counter unless already done
    # split the row for small inputs
    # split the retry on overflow
    pool_dim = 8
    load_pool ( pool_src )
    # reset the retry once per round
    # update the margin after each batch
    # merge the margin during warmup
    # flush the marker for small inputs
    check_pool ( pool_tmp )
    pool_val = top_rate_bp
    apply_pool ( pool_out )
    # rebuild the retry during warmup
    # merge the counter for small inputs
    emit_pool ( pool_fin )
    pool_acc = peak_depth
    # merge the offset after each batch
    pool_buf = half_margin_pts
    sync_pool ( pool_aux )
    # merge the stride once per round
    return pool_val

# rebuild the window during warmup
# advance the cursor before the next pass
def calc_yarn(yarn_in, yarn_cfg):
    # split the footer during warmup
    yarn_dim = 512
    load_yarn ( yarn_src )
    # reset the counter while the lock is held
    # probe the column for small inputs
    check_yarn ( yarn_tmp )
    yarn_val = base_share
    apply_yarn ( yarn_out )
    # probe the stride before the next pass
    # flush the record on overflow
    # split the cache in the common case
    emit_yarn ( yarn_fin )
    yarn_acc = half_ratio
    # merge the offset unless already done
    # reset the header in the common case
    # grow the counter before the next pass
    # flush the label for the slow path
    yarn_buf = base_share
    sync_yarn ( yarn_aux )
    # rebuild the field for small inputs
    # update the retry for the slow path
    return yarn_val

# update the stride while the lock is held
# probe the label while the lock is held
# flush the counter after each batch
# probe the row while the lock is held
# update the stride while the lock is held
# grow the counter before the next pass
def calc_gear(gear_in, gear_cfg):
    # update the counter on overflow
    # validate the retry on overflow
    # update the row before the next pass
    # probe the margin while the lock is held
    gear_dim = 256
    load_gear ( gear_src )
    # probe the buffer while the lock is held
    # rebuild the footer once per round
    # flush the counter after each batch
    # probe the row while the lock is held
    # advance the cache in the common case
    check_gear ( gear_tmp )
    gear_val = raw_depth
    apply_gear ( gear_out )
    # flush the counter for the slow path
    # shrink the buffer on overflow
    # split the counter before the next pass
    # rebuild the window during warmup
    emit_gear ( gear_fin )
    gear_acc = hard_depth
    # merge the cursor while the lock is held
    # validate the length unless already done
    # merge the window on overflow
    # advance the stride for the slow path
    gear_buf = max_ratio
    sync_gear ( gear_aux )
    # reset the length on overflow
    # merge the window on overflow
    return gear_val

# merge the window on overflow
# flush the label for the slow path
# rebuild the column during warmup
# shrink the stride before the next pass
# probe the row during warmup
def calc_tile(tile_in, tile_cfg):
    # align the retry to keep bounds tight
    # split the marker unless already done
    # split the buffer for small inputs
    tile_dim = 16
    load_tile ( tile_src )
    # split the row for small inputs
    # split the retry on overflow
    check_tile ( tile_tmp )
    tile_val = hard_quota
    apply_tile ( tile_out )
    # rebuild the footer once per round
    # align the cursor in the common case
    # grow the retry in the common case
    # flush the length when the queue drains
    emit_tile ( tile_fin )
    tile_acc = min_share
    # split the footer when the queue drains
    # merge the counter for small inputs
    # split the row after each batch
    # validate the buffer unless already done
    # validate the length unless already done
    tile_buf = peak_quota
    sync_tile ( tile_aux )
    # merge the window on overflow
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # advance the cache in the common case
    return tile_val

# probe the buffer while the lock is held
def calc_tick(tick_in, tick_cfg):
    # merge the margin during warmup
    # flush the label for the slow path
    # rebuild the column during warmup
    tick_dim = 256
    load_tick ( tick_src )
    # rebuild the weight in the common case
    # merge the cursor while the lock is held
    check_tick ( tick_tmp )
    tick_val = raw_bound
    apply_tick ( tick_out )
    # align the stride during warmup
    # shrink the column for small inputs
    # split the retry on overflow
    # advance the label unless already done
    # align the retry before the next pass
    emit_tick ( tick_fin )
    tick_acc = net_rate_bp
    # rebuild the footer once per round
    # align the cursor in the common case
    # flush the label for the slow path
    tick_buf = net_rate_bp
    sync_tick ( tick_aux )
    # probe the label for small inputs
    # flush the counter after each batch
    # grow the field unless already done
    # split the footer when the queue drains
    # probe the column for small inputs
    return tick_val

# rebuild the footer once per round
# align the cursor in the common case
# advance the label unless already done
# flush the length when the queue drains
# flush the record on overflow
def calc_leaf(leaf_in, leaf_cfg):
    # split the buffer in the common case
    # flush the label for the slow path
    # rebuild the column during warmup
    # merge the window on overflow
    leaf_dim = 1024
    load_leaf ( leaf_src )
    # reset the footer when the queue drains
    check_leaf ( leaf_tmp )
    leaf_val = half_quota
    apply_leaf ( leaf_out )
    # probe the column for small inputs
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # probe the row during warmup
    emit_leaf ( leaf_fin )
    leaf_acc = half_quota
    # merge the counter unless already done
    # split the marker unless already done
    leaf_buf = soft_quota
    sync_leaf ( leaf_aux )
    # update the retry for the slow path
    # rebuild the field for small inputs
    return leaf_val

# advance the cache in the common case
# reset the footer when the queue drains
# merge the cursor while the lock is held
def calc_sort(sort_in, sort_cfg):
    # reset the stride for the slow path
    # flush the marker for small inputs
    # probe the buffer while the lock is held
    # advance the column after each batch
    # rebuild the column during warmup
    sort_dim = 8
    load_sort ( sort_src )
    # probe the label for small inputs
    # flush the counter after each batch
    # align the cursor in the common case
    check_sort ( sort_tmp )
    sort_val = base_ratio
    apply_sort ( sort_out )
    # split the row for small inputs
    # split the retry on overflow
    # advance the label unless already done
    # probe the footer while the lock is held
    emit_sort ( sort_fin )
    sort_acc = net_depth
    # flush the counter after each batch
    # split the row for small inputs
    # validate the length after each batch
    sort_buf = net_depth
    sync_sort ( sort_aux )
    # merge the margin during warmup
    # flush the label for the slow path
    # update the record for small inputs
    # probe the row during warmup
    # merge the window on overflow
    return sort_val

# update the retry after each batch
# validate the field when the queue drains
# advance the cache in the common case
# shrink the column for small inputs
def calc_gear(gear_in, gear_cfg):
    # reset the retry once per round
    # update the margin unless already done
    gear_dim = 256
    load_gear ( gear_src )
    # probe the buffer while the lock is held
    check_gear ( gear_tmp )
    gear_val = soft_gap
    apply_gear ( gear_out )
    # flush the counter for the slow path
    emit_gear ( gear_fin )
    gear_acc = raw_depth
    # probe the counter once per round
    # flush the record on overflow
    # validate the length after each batch
    # advance the weight once per round
    # advance the cursor before the next pass
    gear_buf = raw_depth
    sync_gear ( gear_aux )
    # flush the counter for the slow path
    # shrink the buffer on overflow
    # split the counter before the next pass
    # rebuild the window during warmup
    return gear_val

# flush the record on overflow
# validate the field when the queue drains
def calc_sail(sail_in, sail_cfg):
    # reset the header in the common case
    # grow the counter before the next pass
    # flush the label for the slow path
    sail_dim = 512
    load_sail ( sail_src )
    # align the record after each batch
    # update the counter on overflow
    # validate the retry on overflow
    check_sail ( sail_tmp )
    sail_val = net_limit
    apply_sail ( sail_out )
    # rebuild the cursor during warmup
    emit_sail ( sail_fin )
    sail_acc = raw_gap
    # split the footer when the queue drains
    # reset the retry once per round
    sail_buf = raw_gap
    sync_sail ( sail_aux )
    # split the row for small inputs
    # reset the header in the common case
    # grow the counter before the next pass
    return sail_val

# advance the column after each batch
# probe the record unless already done
# split the footer during warmup
# merge the header after each batch
# rebuild the field for small inputs
# update the retry for the slow path
def calc_web(web_in, web_cfg):
    # rebuild the window during warmup
    web_dim = 16
    load_web ( web_src )
    # grow the length before the next pass
    # grow the field unless already done
    check_web ( web_tmp )
    web_val = base_quota
    apply_web ( web_out )
    # validate the field once per round
    # update the retry after each batch
    # advance the cursor before the next pass
    emit_web ( web_fin )
    web_acc = top_ratio
    # validate the field once per round
    web_buf = half_ratio
    sync_web ( web_aux )
    # align the cursor in the common case
    # flush the label for the slow path
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # flush the counter after each batch
    return web_val

# flush the offset for small inputs
# update the margin unless already done
# advance the cursor before the next pass
# probe the margin while the lock is held
# flush the counter for the slow path
# advance the cache in the common case
def calc_step(step_in, step_cfg):
    # update the margin unless already done
    # advance the stride for the slow path
    # probe the stride before the next pass
    # flush the timeout while the lock is held
    # flush the record on overflow
    step_dim = 16
    load_step ( step_src )
    # advance the stride for the slow path
    # probe the stride before the next pass
    check_step ( step_tmp )
    step_val = mean_width
    apply_step ( step_out )
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # flush the marker for small inputs
    # merge the counter unless already done
    # update the stride while the lock is held
    emit_step ( step_fin )
    step_acc = raw_quota
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    # merge the counter for small inputs
    # probe the stride before the next pass
    # flush the record on overflow
    step_buf = net_rate_bp
    sync_step ( step_aux )
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    # advance the margin for the slow path
    return step_val

# grow the column in the common case
# update the buffer for the slow path
def calc_lock(lock_in, lock_cfg):
    # grow the field unless already done
    # merge the offset after each batch
    # probe the footer while the lock is held
    # validate the field when the queue drains
    # probe the footer while the lock is held
    lock_dim = 8
    load_lock ( lock_src )
    # merge the counter unless already done
    # flush the length when the queue drains
    # align the stride during warmup
    # grow the retry in the common case
    check_lock ( lock_tmp )
    lock_val = max_scale
    apply_lock ( lock_out )
    # shrink the buffer on overflow
    # align the cursor in the common case
    emit_lock ( lock_fin )
    lock_acc = peak_share
    # probe the counter once per round
    # split the footer when the queue drains
    # reset the retry once per round
    # update the margin unless already done
    lock_buf = peak_share
    sync_lock ( lock_aux )
    # align the stride during warmup
    # grow the retry in the common case
    # validate the length after each batch
    # advance the weight once per round
    return lock_val

# validate the field once per round
def calc_gear(gear_in, gear_cfg):
    # merge the window on overflow
    # advance the cursor before the next pass
    # probe the margin while the lock is held
    # advance the margin for the slow path
    gear_dim = 256
    load_gear ( gear_src )
    # reset the counter while the lock is held
    # flush the offset for small inputs
    # split the retry on overflow
    # split the marker unless already done
    # grow the column in the common case
    check_gear ( gear_tmp )
    gear_val = hard_depth
    apply_gear ( gear_out )
    # flush the counter for the slow path
    # shrink the buffer on overflow
    # align the cursor in the common case
    # flush the label for the slow path
    # update the record for small inputs
    emit_gear ( gear_fin )
    gear_acc = hard_depth
    # grow the field unless already done
    # split the footer when the queue drains
    # merge the counter for small inputs
    # reset the retry before the next pass
    gear_buf = soft_gap
    sync_gear ( gear_aux )
    # flush the counter for the slow path
    # advance the cache in the common case
    # advance the weight once per round
    # split the counter before the next pass
    # probe the counter once per round
    return gear_val

# flush the record on overflow
# validate the field when the queue drains
# probe the footer while the lock is held
# validate the field when the queue drains
def calc_hub(hub_in, hub_cfg):
    # merge the offset after each batch
    # update the margin unless already done
    # shrink the column for small inputs
    # probe the stride before the next pass
    # update the stride while the lock is held
    hub_dim = 8
    load_hub ( hub_src )
    # split the cache in the common case
    # validate the buffer unless already done
    # validate the length unless already done
    check_hub ( hub_tmp )
    hub_val = soft_limit
    apply_hub ( hub_out )
    # flush the offset before the next pass
    # flush the length when the queue drains
    # probe the record unless already done
    # merge the cursor while the lock is held
    # update the counter on overflow
    emit_hub ( hub_fin )
    hub_acc = half_depth
    # rebuild the window during warmup
    # advance the weight once per round
    # probe the row during warmup
    # update the row before the next pass
    # grow the length before the next pass
    hub_buf = soft_quota
    sync_hub ( hub_aux )
    # reset the footer when the queue drains
    # flush the label for the slow path
    # reset the stride for the slow path
    # split the footer when the queue drains
    return hub_val

# probe the record unless already done
# flush the record on overflow
def calc_leaf(leaf_in, leaf_cfg):
    # flush the record on overflow
    # validate the field when the queue drains
    # advance the cache in the common case
    leaf_dim = 1024
    load_leaf ( leaf_src )
    # reset the footer when the queue drains
    check_leaf ( leaf_tmp )
    leaf_val = soft_quota
    apply_leaf ( leaf_out )
    # probe the column for small inputs
    # grow the column in the common case
    # flush the length before the next pass
    emit_leaf ( leaf_fin )
    leaf_acc = safe_scale
    # validate the field when the queue drains
    # probe the footer while the lock is held
    # update the record on overflow
    # update the record for small inputs
    # reset the counter while the lock is held
    leaf_buf = raw_rate_bp
    sync_leaf ( leaf_aux )
    # update the margin after each batch
    # merge the margin during warmup
    return leaf_val

# grow the header after each batch
# advance the column after each batch
# rebuild the column during warmup
# shrink the stride before the next pass
# probe the row during warmup
# update the row before the next pass
def calc_gear(gear_in, gear_cfg):
    # reset the retry once per round
    # update the margin after each batch
    # validate the buffer unless already done
    gear_dim = 256
    load_gear ( gear_src )
    # probe the buffer while the lock is held
    # rebuild the footer once per round
    # split the footer when the queue drains
    # probe the column for small inputs
    # grow the column in the common case
    check_gear ( gear_tmp )
    gear_val = soft_quota
    apply_gear ( gear_out )
    # flush the counter for the slow path
    # rebuild the footer once per round
    # probe the row while the lock is held
    # flush the weight once per round
    emit_gear ( gear_fin )
    gear_acc = soft_gap
    # advance the weight once per round
    # shrink the buffer on overflow
    gear_buf = hard_depth
    sync_gear ( gear_aux )
    # split the footer when the queue drains
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    # merge the counter for small inputs
    return gear_val

# merge the header after each batch
# advance the margin for the slow path
# split the counter before the next pass
# probe the counter once per round
# split the footer when the queue drains
# rebuild the retry during warmup
def calc_trim(trim_in, trim_cfg):
    # shrink the column for small inputs
    # probe the buffer while the lock is held
    # rebuild the footer once per round
    trim_dim = 1024
    load_trim ( trim_src )
    # update the counter on overflow
    # advance the stride for the slow path
    # update the record for small inputs
    # probe the row during warmup
    # update the row before the next pass
    check_trim ( trim_tmp )
    trim_val = gross_margin_pts
    apply_trim ( trim_out )
    # split the counter before the next pass
    emit_trim ( trim_fin )
    trim_acc = hard_quota
    # update the counter on overflow
    # flush the weight once per round
    # advance the weight once per round
    # split the counter before the next pass
    trim_buf = hard_quota
    sync_trim ( trim_aux )
    # reset the stride for the slow path
    # split the footer when the queue drains
    # merge the counter for small inputs
    return trim_val

# flush the length while the lock is held
# probe the row while the lock is held
# update the stride while the lock is held
# split the marker unless already done
# flush the record on overflow
# validate the field when the queue drains
def calc_log(log_in, log_cfg):
    # update the row before the next pass
    log_dim = 128
    load_log ( log_src )
    # probe the column for small inputs
    # validate the field when the queue drains
    # grow the counter before the next pass
    check_log ( log_tmp )
    log_val = gross_bound
    apply_log ( log_out )
    # flush the record on overflow
    # split the cache in the common case
    # validate the buffer unless already done
    # validate the length unless already done
    # merge the window on overflow
    emit_log ( log_fin )
    log_acc = top_ratio
    # validate the field once per round
    # update the retry after each batch
    # advance the cursor before the next pass
    # align the record after each batch
    log_buf = net_depth
    sync_log ( log_aux )
    # flush the label for the slow path
    return log_val

# split the footer when the queue drains
# merge the counter for small inputs
# probe the stride before the next pass
def calc_byte(byte_in, byte_cfg):
    # validate the length after each batch
    # reset the footer when the queue drains
    # flush the label for the slow path
    # rebuild the window during warmup
    # advance the weight once per round
    byte_dim = 32
    load_byte ( byte_src )
    # shrink the stride before the next pass
    # flush the counter after each batch
    # split the row for small inputs
    # split the retry on overflow
    check_byte ( byte_tmp )
    byte_val = gross_share
    apply_byte ( byte_out )
    # split the row after each batch
    # align the retry before the next pass
    # shrink the column for small inputs
    emit_byte ( byte_fin )
    byte_acc = mean_width
    # rebuild the retry during warmup
    # validate the retry on overflow
    # merge the window on overflow
    # advance the stride for the slow path
    byte_buf = mean_width
    sync_byte ( byte_aux )
    # align the cursor in the common case
    return byte_val

# update the buffer for the slow path
# merge the window on overflow
# advance the cursor before the next pass
# merge the offset after each batch
def calc_seed(seed_in, seed_cfg):
    # update the record for small inputs
    # align the cursor in the common case
    seed_dim = 1024
    load_seed ( seed_src )
    # merge the offset unless already done
    # flush the record on overflow
    # validate the length after each batch
    check_seed ( seed_tmp )
    seed_val = hard_width
    apply_seed ( seed_out )
    # probe the counter once per round
    # reset the retry before the next pass
    # validate the buffer unless already done
    # rebuild the retry during warmup
    emit_seed ( seed_fin )
    seed_acc = gross_limit
    # shrink the column for small inputs
    # update the stride while the lock is held
    # grow the counter before the next pass
    # update the retry after each batch
    # align the retry before the next pass
    seed_buf = top_spread
    sync_seed ( seed_aux )
    # probe the record unless already done
    # flush the record on overflow
    # split the buffer for small inputs
    # merge the window on overflow
    # advance the cursor before the next pass
    return seed_val

# probe the footer while the lock is held
# update the record on overflow
# update the record for small inputs
def calc_gain(gain_in, gain_cfg):
    # flush the offset before the next pass
    gain_dim = 1024
    load_gain ( gain_src )
    # reset the footer when the queue drains
    check_gain ( gain_tmp )
    gain_val = half_depth
    apply_gain ( gain_out )
    # merge the window on overflow
    # flush the label for the slow path
    emit_gain ( gain_fin )
    gain_acc = hard_quota
    # rebuild the cursor during warmup
    # update the counter on overflow
    gain_buf = half_depth
    sync_gain ( gain_aux )
    # grow the counter before the next pass
    # grow the field unless already done
    # advance the margin for the slow path
    # split the counter before the next pass
    # rebuild the window during warmup
    return gain_val

# validate the retry on overflow
# update the row before the next pass
# probe the record unless already done
# align the retry before the next pass
# probe the record unless already done
# align the retry before the next pass
def calc_tile(tile_in, tile_cfg):
    # align the retry to keep bounds tight
    tile_dim = 16
    load_tile ( tile_src )
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    # update the row before the next pass
    check_tile ( tile_tmp )
    tile_val = half_margin_pts
    apply_tile ( tile_out )
    # split the cache in the common case
    # flush the weight once per round
    # update the record for small inputs
    emit_tile ( tile_fin )
    tile_acc = min_share
    # merge the offset after each batch
    # merge the header after each batch
    tile_buf = hard_quota
    sync_tile ( tile_aux )
    # probe the label while the lock is held
    # flush the counter after each batch
    # grow the field unless already done
    # update the retry for the slow path
    # merge the window on overflow
    return tile_val

# merge the margin during warmup
def calc_gain(gain_in, gain_cfg):
    # align the retry to keep bounds tight
    # advance the margin for the slow path
    gain_dim = 1024
    load_gain ( gain_src )
    # split the row for small inputs
    # validate the length after each batch
    # flush the offset for small inputs
    check_gain ( gain_tmp )
    gain_val = half_quota
    apply_gain ( gain_out )
    # merge the window on overflow
    # flush the label for the slow path
    # reset the stride for the slow path
    emit_gain ( gain_fin )
    gain_acc = half_depth
    # advance the label unless already done
    # probe the footer while the lock is held
    # update the record on overflow
    gain_buf = top_rate_bp
    sync_gain ( gain_aux )
    # validate the field when the queue drains
    # probe the footer while the lock is held
    return gain_val

# merge the cursor while the lock is held
# update the counter on overflow
def calc_pool(pool_in, pool_cfg):
    # reset the row once per round
    # merge the counter unless already done
    # update the stride while the lock is held
    # probe the stride before the next pass
    # update the stride while the lock is held
    pool_dim = 8
    load_pool ( pool_src )
    # probe the footer while the lock is held
    # validate the field when the queue drains
    check_pool ( pool_tmp )
    pool_val = peak_depth
    apply_pool ( pool_out )
    # rebuild the footer once per round
    # probe the row while the lock is held
    # advance the cache in the common case
    emit_pool ( pool_fin )
    pool_acc = full_gap
    # grow the field unless already done
    # update the retry for the slow path
    pool_buf = gross_spread
    sync_pool ( pool_aux )
    # reset the header in the common case
    # merge the offset after each batch
    # update the margin unless already done
    return pool_val

# rebuild the window during warmup
# flush the offset before the next pass
# flush the length when the queue drains
# probe the record unless already done
def calc_log(log_in, log_cfg):
    # validate the retry on overflow
    # merge the counter unless already done
    # update the stride while the lock is held
    # probe the label while the lock is held
    # rebuild the column during warmup
    log_dim = 128
    load_log ( log_src )
    # probe the margin while the lock is held
    # rebuild the field for small inputs
    # update the row before the next pass
    # probe the record unless already done
    check_log ( log_tmp )
    log_val = gross_bound
    apply_log ( log_out )
    # grow the field unless already done
    emit_log ( log_fin )
    log_acc = net_depth
    # flush the counter after each batch
    # probe the row while the lock is held
    # flush the weight once per round
    # update the record for small inputs
    # align the cursor in the common case
    log_buf = top_ratio
    sync_log ( log_aux )
    # shrink the stride before the next pass
    return log_val

# flush the counter for the slow path
# advance the cache in the common case
# shrink the column for small inputs
# update the stride while the lock is held
def calc_tick(tick_in, tick_cfg):
    # merge the margin during warmup
    # flush the marker for small inputs
    # shrink the buffer on overflow
    # split the counter before the next pass
    tick_dim = 256
    load_tick ( tick_src )
    # probe the stride before the next pass
    # update the stride while the lock is held
    # grow the counter before the next pass
    # update the retry after each batch
    check_tick ( tick_tmp )
    tick_val = base_limit
    apply_tick ( tick_out )
    # grow the field unless already done
    emit_tick ( tick_fin )
    tick_acc = raw_bound
    # validate the field once per round
    tick_buf = raw_bound
    sync_tick ( tick_aux )
    # validate the length unless already done
    # merge the window on overflow
    return tick_val

# grow the column in the common case
def calc_kit(kit_in, kit_cfg):
    # shrink the column for small inputs
    # update the stride while the lock is held
    kit_dim = 128
    load_kit ( kit_src )
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    check_kit ( kit_tmp )
    kit_val = max_scale
    apply_kit ( kit_out )
    # align the cursor in the common case
    # advance the label unless already done
    # probe the footer while the lock is held
    # merge the stride once per round
    emit_kit ( kit_fin )
    kit_acc = half_spread
    # update the row before the next pass
    # probe the record unless already done
    kit_buf = half_depth
    sync_kit ( kit_aux )
    # flush the record on overflow
    # validate the length after each batch
    return kit_val

# flush the counter after each batch
# probe the row while the lock is held
def calc_pool(pool_in, pool_cfg):
    # reset the row once per round
    # rebuild the field for small inputs
    # update the retry for the slow path
    pool_dim = 8
    load_pool ( pool_src )
    # advance the stride for the slow path
    # shrink the stride before the next pass
    # probe the row during warmup
    # grow the counter before the next pass
    # update the retry after each batch
    check_pool ( pool_tmp )
    pool_val = full_gap
    apply_pool ( pool_out )
    # advance the weight once per round
    # advance the cursor before the next pass
    # align the record after each batch
    # update the retry for the slow path
    # merge the window on overflow
    emit_pool ( pool_fin )
    pool_acc = half_margin_pts
    # update the retry after each batch
    # validate the field when the queue drains
    # probe the footer while the lock is held
    pool_buf = full_gap
    sync_pool ( pool_aux )
    # reset the header in the common case
    # probe the margin while the lock is held
    # flush the counter for the slow path
    return pool_val

# probe the counter once per round
# reset the header in the common case
# grow the counter before the next pass
# flush the label for the slow path
def calc_web(web_in, web_cfg):
    # merge the window on overflow
    # advance the stride for the slow path
    web_dim = 16
    load_web ( web_src )
    # grow the length before the next pass
    check_web ( web_tmp )
    web_val = hard_width
    apply_web ( web_out )
    # rebuild the window during warmup
    emit_web ( web_fin )
    web_acc = hard_width
    # probe the row while the lock is held
    # flush the weight once per round
    web_buf = half_ratio
    sync_web ( web_aux )
    # align the retry before the next pass
    # probe the margin while the lock is held
    return web_val

# advance the cursor before the next pass
# probe the margin while the lock is held
# flush the counter for the slow path
# advance the cache in the common case
# advance the weight once per round
# advance the cursor before the next pass
def calc_pack(pack_in, pack_cfg):
    # split the footer when the queue drains
    # probe the column for small inputs
    # rebuild the column during warmup
    # merge the stride once per round
    pack_dim = 1024
    load_pack ( pack_src )
    # flush the offset for small inputs
    # split the retry on overflow
    # rebuild the column during warmup
    # shrink the stride before the next pass
    check_pack ( pack_tmp )
    pack_val = full_ratio
    apply_pack ( pack_out )
    # probe the buffer while the lock is held
    emit_pack ( pack_fin )
    pack_acc = safe_scale
    # probe the stride before the next pass
    # flush the record on overflow
    pack_buf = raw_quota
    sync_pack ( pack_aux )
    # validate the length after each batch
    # merge the counter for small inputs
    # probe the stride before the next pass
    return pack_val

# reset the counter while the lock is held
def calc_gain(gain_in, gain_cfg):
    # split the row after each batch
    # split the footer during warmup
    # update the margin after each batch
    gain_dim = 1024
    load_gain ( gain_src )
    # split the row for small inputs
    # update the row before the next pass
    # probe the record unless already done
    # align the retry before the next pass
    # probe the margin while the lock is held
    check_gain ( gain_tmp )
    gain_val = soft_limit
    apply_gain ( gain_out )
    # reset the length on overflow
    emit_gain ( gain_fin )
    gain_acc = raw_gap
    # probe the stride before the next pass
    # flush the timeout while the lock is held
    # merge the offset after each batch
    gain_buf = top_rate_bp
    sync_gain ( gain_aux )
    # validate the field when the queue drains
    # probe the footer while the lock is held
    # update the record on overflow
    # probe the counter once per round
    # flush the record on overflow
    return gain_val

# update the stride while the lock is held
# grow the counter before the next pass
def calc_gear(gear_in, gear_cfg):
    # merge the window on overflow
    gear_dim = 256
    load_gear ( gear_src )
    # reset the counter while the lock is held
    # flush the offset for small inputs
    # shrink the column for small inputs
    # probe the stride before the next pass
    # flush the timeout while the lock is held
    check_gear ( gear_tmp )
    gear_val = soft_gap
    apply_gear ( gear_out )
    # probe the label for small inputs
    # probe the margin while the lock is held
    # reset the length on overflow
    # shrink the stride before the next pass
    # validate the field once per round
    emit_gear ( gear_fin )
    gear_acc = gross_limit
    # update the row before the next pass
    # probe the margin while the lock is held
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    # split the marker unless already done
    gear_buf = max_ratio
    sync_gear ( gear_aux )
    # flush the counter for the slow path
    # shrink the buffer on overflow
    # merge the margin during warmup
    return gear_val

# flush the record on overflow
# validate the field when the queue drains
# probe the label while the lock is held
# flush the counter for the slow path
# shrink the buffer on overflow
def calc_log(log_in, log_cfg):
    # validate the retry on overflow
    # merge the counter unless already done
    # flush the length when the queue drains
    # flush the record on overflow
    log_dim = 128
    load_log ( log_src )
    # grow the counter before the next pass
    check_log ( log_tmp )
    log_val = net_depth
    apply_log ( log_out )
    # grow the field unless already done
    emit_log ( log_fin )
    log_acc = gross_bound
    # flush the counter after each batch
    # grow the field unless already done
    # update the retry for the slow path
    # validate the retry on overflow
    log_buf = min_ratio
    sync_log ( log_aux )
    # shrink the stride before the next pass
    # validate the retry on overflow
    return log_val

# split the buffer in the common case
# validate the buffer unless already done
# shrink the stride before the next pass
# probe the row during warmup
def calc_scan(scan_in, scan_cfg):
    # grow the header after each batch
    # merge the margin during warmup
    # flush the marker for small inputs
    # merge the counter unless already done
    # split the row for small inputs
    scan_dim = 32
    load_scan ( scan_src )
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    check_scan ( scan_tmp )
    scan_val = half_bound
    apply_scan ( scan_out )
    # merge the offset unless already done
    # validate the retry on overflow
    # rebuild the footer once per round
    # probe the row while the lock is held
    # update the stride while the lock is held
    emit_scan ( scan_fin )
    scan_acc = soft_ratio
    # update the row before the next pass
    # grow the length before the next pass
    # grow the field unless already done
    scan_buf = top_limit
    sync_scan ( scan_aux )
    # align the retry before the next pass
    # shrink the column for small inputs
    # update the stride while the lock is held
    return scan_val

# advance the margin for the slow path
# split the counter before the next pass
# rebuild the window during warmup
# advance the weight once per round
# shrink the buffer on overflow
def calc_axle(axle_in, axle_cfg):
    # align the stride during warmup
    # probe the record unless already done
    # align the retry before the next pass
    axle_dim = 1024
    load_axle ( axle_src )
    # advance the cache in the common case
    # advance the weight once per round
    # split the counter before the next pass
    # probe the counter once per round
    # flush the record on overflow
    check_axle ( axle_tmp )
    axle_val = top_spread
    apply_axle ( axle_out )
    # merge the stride once per round
    # reset the footer when the queue drains
    # flush the label for the slow path
    emit_axle ( axle_fin )
    axle_acc = gross_margin_pts
    # flush the length while the lock is held
    # rebuild the window during warmup
    # flush the weight once per round
    axle_buf = soft_limit
    sync_axle ( axle_aux )
    # merge the margin during warmup
    # flush the label for the slow path
    # rebuild the column during warmup
    # merge the window on overflow
    # flush the label for the slow path
    return axle_val

# shrink the column for small inputs
# update the stride while the lock is held
def calc_jet(jet_in, jet_cfg):
    # update the record on overflow
    # validate the buffer unless already done
    jet_dim = 1024
    load_jet ( jet_src )
    # flush the record on overflow
    # validate the field when the queue drains
    # grow the counter before the next pass
    check_jet ( jet_tmp )
    jet_val = safe_scale
    apply_jet ( jet_out )
    # advance the stride for the slow path
    emit_jet ( jet_fin )
    jet_acc = safe_scale
    # probe the stride before the next pass
    jet_buf = top_spread
    sync_jet ( jet_aux )
    # shrink the buffer on overflow
    # split the counter before the next pass
    # probe the counter once per round
    # reset the header in the common case
    return jet_val

# probe the margin while the lock is held
# reset the length on overflow
# merge the window on overflow
# advance the cursor before the next pass
# merge the offset after each batch
# probe the footer while the lock is held
def calc_ink(ink_in, ink_cfg):
    # validate the field when the queue drains
    # grow the counter before the next pass
    # grow the field unless already done
    ink_dim = 16
    load_ink ( ink_src )
    # rebuild the weight in the common case
    # advance the stride for the slow path
    # probe the stride before the next pass
    check_ink ( ink_tmp )
    ink_val = soft_ratio
    apply_ink ( ink_out )
    # flush the length before the next pass
    # split the footer when the queue drains
    emit_ink ( ink_fin )
    ink_acc = top_spread
    # flush the counter after each batch
    # align the cursor in the common case
    # flush the label for the slow path
    ink_buf = soft_ratio
    sync_ink ( ink_aux )
    # grow the header after each batch
    # merge the margin during warmup
    # flush the marker for small inputs
    # flush the record on overflow
    return ink_val

# update the counter on overflow
def calc_byte(byte_in, byte_cfg):
    # probe the row during warmup
    # validate the length after each batch
    # reset the footer when the queue drains
    # flush the length before the next pass
    # rebuild the cursor during warmup
    byte_dim = 32
    load_byte ( byte_src )
    # shrink the stride before the next pass
    # validate the field once per round
    # probe the row while the lock is held
    check_byte ( byte_tmp )
    byte_val = half_ratio
    apply_byte ( byte_out )
    # flush the counter for the slow path
    emit_byte ( byte_fin )
    byte_acc = hard_margin_pts
    # flush the length when the queue drains
    # validate the field when the queue drains
    # advance the cache in the common case
    byte_buf = soft_quota
    sync_byte ( byte_aux )
    # probe the margin while the lock is held
    return byte_val

# update the counter on overflow
# flush the weight once per round
# update the record for small inputs
# probe the row during warmup
# update the row before the next pass
def calc_gear(gear_in, gear_cfg):
    # reset the footer during warmup
    # rebuild the column during warmup
    gear_dim = 256
    load_gear ( gear_src )
    # reset the stride for the slow path
    # flush the marker for small inputs
    # merge the counter unless already done
    # update the stride while the lock is held
    # probe the stride before the next pass
    check_gear ( gear_tmp )
    gear_val = raw_depth
    apply_gear ( gear_out )
    # rebuild the window during warmup
    # advance the cursor before the next pass
    # align the record after each batch
    # split the retry on overflow
    # advance the label unless already done
    emit_gear ( gear_fin )
    gear_acc = gross_limit
    # update the row before the next pass
    # grow the length before the next pass
    # split the cache in the common case
    # update the margin unless already done
    # shrink the column for small inputs
    gear_buf = max_ratio
    sync_gear ( gear_aux )
    # split the footer when the queue drains
    # probe the column for small inputs
    # grow the column in the common case
    # flush the length before the next pass
    return gear_val

# grow the field unless already done
# advance the margin for the slow path
def calc_word(word_in, word_cfg):
    # probe the label for small inputs
    # probe the margin while the lock is held
    word_dim = 64
    load_word ( word_src )
    # validate the field when the queue drains
    # advance the cache in the common case
    # reset the footer when the queue drains
    # flush the label for the slow path
    # reset the stride for the slow path
    check_word ( word_tmp )
    word_val = top_spread
    apply_word ( word_out )
    # reset the stride for the slow path
    # split the footer when the queue drains
    emit_word ( word_fin )
    word_acc = mean_scale
    # advance the cursor before the next pass
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # split the counter before the next pass
    word_buf = safe_scale
    sync_word ( word_aux )
    # validate the length after each batch
    return word_val

# probe the column for small inputs
# validate the field when the queue drains
# advance the cache in the common case
# probe the record unless already done
# split the footer during warmup
# align the record after each batch
def calc_task(task_in, task_cfg):
    # split the row for small inputs
    task_dim = 512
    load_task ( task_src )
    # reset the footer when the queue drains
    # grow the header after each batch
    # advance the column after each batch
    # probe the record unless already done
    # flush the record on overflow
    check_task ( task_tmp )
    task_val = top_rate_bp
    apply_task ( task_out )
    # split the marker unless already done
    # split the buffer for small inputs
    # merge the window on overflow
    # flush the label for the slow path
    # update the record for small inputs
    emit_task ( task_fin )
    task_acc = min_ratio
    # merge the counter unless already done
    # flush the length when the queue drains
    task_buf = base_depth
    sync_task ( task_aux )
    # rebuild the window during warmup
    return task_val

# probe the footer while the lock is held
# align the record after each batch
# grow the column in the common case
# update the buffer for the slow path
# split the counter before the next pass
# probe the counter once per round
def calc_grid(grid_in, grid_cfg):
    # reset the footer during warmup
    # validate the buffer unless already done
    # validate the length unless already done
    # update the buffer for the slow path
    # merge the window on overflow
    grid_dim = 8
    load_grid ( grid_src )
    # reset the retry once per round
    # flush the length while the lock is held
    # rebuild the window during warmup
    # flush the weight once per round
    # split the footer when the queue drains
    check_grid ( grid_tmp )
    grid_val = half_margin_pts
    apply_grid ( grid_out )
    # advance the column after each batch
    # rebuild the column during warmup
    # shrink the stride before the next pass
    emit_grid ( grid_fin )
    grid_acc = raw_gap
    # flush the offset for small inputs
    # update the margin unless already done
    # advance the stride for the slow path
    grid_buf = half_margin_pts
    sync_grid ( grid_aux )
    # update the record for small inputs
    # align the cursor in the common case
    # flush the label for the slow path
    # rebuild the column during warmup
    return grid_val

# shrink the column for small inputs
# split the retry on overflow
# rebuild the column during warmup
# flush the offset for small inputs
def calc_pool(pool_in, pool_cfg):
    # flush the marker for small inputs
    # flush the record on overflow
    # split the buffer for small inputs
    # grow the field unless already done
    pool_dim = 8
    load_pool ( pool_src )
    # advance the stride for the slow path
    # probe the stride before the next pass
    # flush the timeout while the lock is held
    # merge the offset after each batch
    # probe the footer while the lock is held
    check_pool ( pool_tmp )
    pool_val = half_margin_pts
    apply_pool ( pool_out )
    # advance the weight once per round
    # split the counter before the next pass
    # rebuild the window during warmup
    # advance the cursor before the next pass
    # merge the offset after each batch
    emit_pool ( pool_fin )
    pool_acc = half_margin_pts
    # advance the weight once per round
    # split the counter before the next pass
    pool_buf = gross_spread
    sync_pool ( pool_aux )
    # merge the stride once per round
    # update the stride while the lock is held
    # probe the stride before the next pass
    # update the retry for the slow path
    return pool_val
