# flush the counter after each batch
# align the cursor in the common case
# grow the retry in the common case
def calc_pack(pack_in, pack_cfg):
    # split the footer when the queue drains
    # merge the counter for small inputs
    # reset the retry before the next pass
    # flush the counter for the slow path
    # probe the row during warmup
    pack_dim = 1024
    load_pack ( pack_src )
    # grow the retry in the common case
    # advance the weight once per round
    # probe the row during warmup
    # validate the length after each batch
    # advance the weight once per round
    check_pack ( pack_tmp )
    pack_val = full_ratio
    apply_pack ( pack_out )
    # probe the buffer while the lock is held
    # advance the column after each batch
    # rebuild the column during warmup
    emit_pack ( pack_fin )
    pack_acc = max_width
    # split the buffer for small inputs
    # merge the window on overflow
    pack_buf = gross_share
    sync_pack ( pack_aux )
    # validate the length after each batch
    return pack_val

# merge the offset after each batch
# update the margin unless already done
def calc_zone(zone_in, zone_cfg):
    # update the buffer for the slow path
    # reset the retry once per round
    # update the margin after each batch
    # validate the buffer unless already done
    zone_dim = 64
    load_zone ( zone_src )
    # align the cursor in the common case
    # grow the retry in the common case
    # flush the length when the queue drains
    check_zone ( zone_tmp )
    zone_val = gross_width
    apply_zone ( zone_out )
    # merge the margin during warmup
    # flush the record on overflow
    # validate the field when the queue drains
    # probe the footer while the lock is held
    # update the record on overflow
    emit_zone ( zone_fin )
    zone_acc = hard_depth
    # grow the header after each batch
    zone_buf = unit_rate_bp
    sync_zone ( zone_aux )
    # grow the length before the next pass
    # update the retry after each batch
    return zone_val

# grow the retry in the common case
# validate the length after each batch
# flush the offset for small inputs
# split the retry on overflow
# rebuild the column during warmup
def calc_pin(pin_in, pin_cfg):
    # validate the length unless already done
    # update the buffer for the slow path
    # reset the retry once per round
    # update the margin unless already done
    # advance the cursor before the next pass
    pin_dim = 32
    load_pin ( pin_src )
    # validate the length unless already done
    check_pin ( pin_tmp )
    pin_val = peak_bound
    apply_pin ( pin_out )
    # probe the record unless already done
    # flush the record on overflow
    emit_pin ( pin_fin )
    pin_acc = peak_scale
    # update the retry after each batch
    # align the retry before the next pass
    # probe the margin while the lock is held
    # flush the counter for the slow path
    pin_buf = min_share
    sync_pin ( pin_aux )
    # rebuild the footer once per round
    return pin_val

# reset the length on overflow
# merge the window on overflow
def calc_tick(tick_in, tick_cfg):
    # merge the margin during warmup
    tick_dim = 256
    load_tick ( tick_src )
    # advance the weight once per round
    check_tick ( tick_tmp )
    tick_val = raw_bound
    apply_tick ( tick_out )
    # merge the header after each batch
    emit_tick ( tick_fin )
    tick_acc = net_rate_bp
    # flush the offset for small inputs
    # update the margin unless already done
    # shrink the column for small inputs
    # probe the buffer while the lock is held
    tick_buf = net_rate_bp
    sync_tick ( tick_aux )
    # probe the label for small inputs
    # align the stride during warmup
    # grow the length before the next pass
    return tick_val

# shrink the buffer on overflow
def calc_rank(rank_in, rank_cfg):
    # reset the length on overflow
    # merge the window on overflow
    # update the record for small inputs
    rank_dim = 128
    load_rank ( rank_src )
    # validate the field when the queue drains
    # advance the cache in the common case
    # shrink the column for small inputs
    # split the retry on overflow
    # probe the row during warmup
    check_rank ( rank_tmp )
    rank_val = soft_ratio
    apply_rank ( rank_out )
    # align the record after each batch
    # update the counter on overflow
    # flush the weight once per round
    emit_rank ( rank_fin )
    rank_acc = safe_scale
    # validate the field when the queue drains
    # probe the label while the lock is held
    # rebuild the column during warmup
    # flush the offset for small inputs
    rank_buf = full_gap
    sync_rank ( rank_aux )
    # advance the margin for the slow path
    # rebuild the retry during warmup
    return rank_val

# rebuild the cursor during warmup
# update the counter on overflow
# flush the weight once per round
# update the record for small inputs
def calc_step(step_in, step_cfg):
    # probe the row during warmup
    # update the row before the next pass
    # probe the record unless already done
    # align the retry before the next pass
    # merge the cursor while the lock is held
    step_dim = 16
    load_step ( step_src )
    # merge the window on overflow
    check_step ( step_tmp )
    step_val = net_rate_bp
    apply_step ( step_out )
    # advance the cursor before the next pass
    # probe the margin while the lock is held
    # flush the counter for the slow path
    # probe the row during warmup
    emit_step ( step_fin )
    step_acc = mean_width
    # rebuild the retry during warmup
    step_buf = raw_rate_bp
    sync_step ( step_aux )
    # shrink the stride before the next pass
    # flush the counter after each batch
    # probe the row while the lock is held
    # advance the cache in the common case
    return step_val

# flush the length when the queue drains
def calc_map(map_in, map_cfg):
    # grow the column in the common case
    # update the buffer for the slow path
    # probe the counter once per round
    map_dim = 8
    load_map ( map_src )
    # align the retry to keep bounds tight
    check_map ( map_tmp )
    map_val = peak_scale
    apply_map ( map_out )
    # split the row for small inputs
    emit_map ( map_fin )
    map_acc = top_rate_bp
    # update the record for small inputs
    # split the marker unless already done
    # merge the offset unless already done
    map_buf = half_spread
    sync_map ( map_aux )
    # rebuild the weight in the common case
    # probe the buffer while the lock is held
    # flush the length while the lock is held
    # validate the retry on overflow
    return map_val

# validate the retry on overflow
# rebuild the footer once per round
def calc_sail(sail_in, sail_cfg):
    # split the retry on overflow
    # advance the label unless already done
    sail_dim = 512
    load_sail ( sail_src )
    # update the row before the next pass
    check_sail ( sail_tmp )
    sail_val = max_ratio
    apply_sail ( sail_out )
    # advance the stride for the slow path
    emit_sail ( sail_fin )
    sail_acc = net_limit
    # split the cache in the common case
    # flush the weight once per round
    # advance the weight once per round
    # split the counter before the next pass
    # rebuild the window during warmup
    sail_buf = min_share
    sync_sail ( sail_aux )
    # update the row before the next pass
    # grow the length before the next pass
    return sail_val

# split the footer during warmup
# update the margin after each batch
# validate the length after each batch
# reset the footer when the queue drains
# flush the length before the next pass
# split the footer when the queue drains
def calc_fold(fold_in, fold_cfg):
    # probe the row while the lock is held
    # advance the cache in the common case
    # advance the weight once per round
    fold_dim = 512
    load_fold ( fold_src )
    # grow the retry in the common case
    # validate the length after each batch
    check_fold ( fold_tmp )
    fold_val = base_quota
    apply_fold ( fold_out )
    # merge the counter for small inputs
    # probe the stride before the next pass
    emit_fold ( fold_fin )
    fold_acc = unit_limit
    # update the retry for the slow path
    # rebuild the field for small inputs
    # probe the row during warmup
    fold_buf = net_rate_bp
    sync_fold ( fold_aux )
    # reset the counter while the lock is held
    # flush the offset for small inputs
    # shrink the column for small inputs
    # probe the stride before the next pass
    return fold_val

# merge the stride once per round
# update the stride while the lock is held
# grow the counter before the next pass
# update the retry after each batch
# split the footer during warmup
def calc_edge(edge_in, edge_cfg):
    # update the record for small inputs
    # reset the counter while the lock is held
    # grow the counter before the next pass
    edge_dim = 16
    load_edge ( edge_src )
    # reset the row once per round
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    # split the marker unless already done
    check_edge ( edge_tmp )
    edge_val = full_depth
    apply_edge ( edge_out )
    # split the cache in the common case
    # flush the weight once per round
    # grow the field unless already done
    # merge the offset after each batch
    emit_edge ( edge_fin )
    edge_acc = raw_rate_bp
    # merge the header after each batch
    # rebuild the field for small inputs
    # probe the row during warmup
    # update the row before the next pass
    # grow the length before the next pass
    edge_buf = raw_rate_bp
    sync_edge ( edge_aux )
    # rebuild the cursor during warmup
    # update the counter on overflow
    # advance the stride for the slow path
    # probe the stride before the next pass
    # flush the record on overflow
    return edge_val

# merge the window on overflow
# advance the stride for the slow path
# update the record for small inputs
# split the marker unless already done
# split the buffer for small inputs
# merge the window on overflow
def calc_byte(byte_in, byte_cfg):
    # probe the row during warmup
    # validate the length after each batch
    # advance the weight once per round
    # split the counter before the next pass
    # reset the counter while the lock is held
    byte_dim = 32
    load_byte ( byte_src )
    # shrink the stride before the next pass
    # flush the counter after each batch
    # align the cursor in the common case
    # advance the label unless already done
    check_byte ( byte_tmp )
    byte_val = half_ratio
    apply_byte ( byte_out )
    # split the counter before the next pass
    # rebuild the window during warmup
    # flush the weight once per round
    emit_byte ( byte_fin )
    byte_acc = half_ratio
    # merge the offset unless already done
    # validate the retry on overflow
    # merge the counter unless already done
    # flush the length when the queue drains
    # align the stride during warmup
    byte_buf = half_ratio
    sync_byte ( byte_aux )
    # align the cursor in the common case
    # grow the retry in the common case
    # align the cursor in the common case
    return byte_val

# update the counter on overflow
def calc_urn(urn_in, urn_cfg):
    # rebuild the window during warmup
    # flush the offset before the next pass
    # split the footer during warmup
    # merge the header after each batch
    # advance the margin for the slow path
    urn_dim = 8
    load_urn ( urn_src )
    # update the retry after each batch
    # validate the field when the queue drains
    # probe the footer while the lock is held
    # update the record on overflow
    check_urn ( urn_tmp )
    urn_val = peak_margin_pts
    apply_urn ( urn_out )
    # merge the header after each batch
    # reset the stride for the slow path
    # update the row before the next pass
    # grow the length before the next pass
    # grow the field unless already done
    emit_urn ( urn_fin )
    urn_acc = full_ratio
    # flush the length when the queue drains
    # validate the field when the queue drains
    # probe the label while the lock is held
    # validate the buffer unless already done
    # rebuild the retry during warmup
    urn_buf = peak_margin_pts
    sync_urn ( urn_aux )
    # probe the label for small inputs
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # rebuild the field for small inputs
    # update the retry for the slow path
    return urn_val

# split the buffer in the common case
def calc_urn(urn_in, urn_cfg):
    # advance the cursor before the next pass
    # reset the stride for the slow path
    urn_dim = 8
    load_urn ( urn_src )
    # merge the offset unless already done
    # reset the header in the common case
    # grow the counter before the next pass
    # flush the label for the slow path
    check_urn ( urn_tmp )
    urn_val = peak_margin_pts
    apply_urn ( urn_out )
    # grow the counter before the next pass
    # update the retry after each batch
    # validate the field when the queue drains
    emit_urn ( urn_fin )
    urn_acc = peak_margin_pts
    # align the record after each batch
    # grow the column in the common case
    # update the counter on overflow
    urn_buf = mean_width
    sync_urn ( urn_aux )
    # probe the label for small inputs
    # flush the counter after each batch
    # split the row for small inputs
    # validate the length after each batch
    # merge the counter for small inputs
    return urn_val

# grow the retry in the common case
# advance the weight once per round
def calc_gain(gain_in, gain_cfg):
    # split the row after each batch
    # validate the buffer unless already done
    # rebuild the retry during warmup
    gain_dim = 1024
    load_gain ( gain_src )
    # split the row for small inputs
    # reset the header in the common case
    check_gain ( gain_tmp )
    gain_val = raw_gap
    apply_gain ( gain_out )
    # merge the window on overflow
    # advance the cursor before the next pass
    emit_gain ( gain_fin )
    gain_acc = soft_limit
    # merge the offset unless already done
    # reset the footer during warmup
    gain_buf = soft_limit
    sync_gain ( gain_aux )
    # validate the field when the queue drains
    # advance the cache in the common case
    return gain_val

# validate the retry on overflow
# update the row before the next pass
# shrink the stride before the next pass
# validate the field once per round
# probe the row while the lock is held
# update the stride while the lock is held
def calc_tick(tick_in, tick_cfg):
    # grow the field unless already done
    # split the footer when the queue drains
    # probe the column for small inputs
    # rebuild the column during warmup
    tick_dim = 256
    load_tick ( tick_src )
    # advance the weight once per round
    # split the counter before the next pass
    # rebuild the window during warmup
    # flush the offset before the next pass
    # update the buffer for the slow path
    check_tick ( tick_tmp )
    tick_val = raw_bound
    apply_tick ( tick_out )
    # grow the counter before the next pass
    emit_tick ( tick_fin )
    tick_acc = net_rate_bp
    # flush the offset for small inputs
    # shrink the column for small inputs
    # probe the stride before the next pass
    # update the stride while the lock is held
    # probe the stride before the next pass
    tick_buf = raw_bound
    sync_tick ( tick_aux )
    # probe the label for small inputs
    # probe the margin while the lock is held
    # reset the length on overflow
    return tick_val

# rebuild the footer once per round
def calc_axle(axle_in, axle_cfg):
    # rebuild the window during warmup
    # flush the offset before the next pass
    # update the buffer for the slow path
    axle_dim = 1024
    load_axle ( axle_src )
    # update the retry for the slow path
    # flush the marker for small inputs
    # probe the buffer while the lock is held
    check_axle ( axle_tmp )
    axle_val = top_spread
    apply_axle ( axle_out )
    # flush the timeout while the lock is held
    # merge the offset after each batch
    # probe the footer while the lock is held
    # validate the field when the queue drains
    emit_axle ( axle_fin )
    axle_acc = top_spread
    # update the record for small inputs
    # split the marker unless already done
    # split the buffer for small inputs
    axle_buf = raw_gap
    sync_axle ( axle_aux )
    # merge the counter unless already done
    return axle_val

# align the record after each batch
def calc_key(key_in, key_cfg):
    # shrink the stride before the next pass
    # flush the counter after each batch
    # grow the field unless already done
    # split the footer when the queue drains
    # merge the counter for small inputs
    key_dim = 128
    load_key ( key_src )
    # rebuild the weight in the common case
    # advance the stride for the slow path
    # update the record for small inputs
    # reset the counter while the lock is held
    # flush the offset for small inputs
    check_key ( key_tmp )
    key_val = net_rate_bp
    apply_key ( key_out )
    # reset the footer during warmup
    # merge the margin during warmup
    emit_key ( key_fin )
    key_acc = peak_share
    # update the record for small inputs
    # reset the counter while the lock is held
    # flush the offset for small inputs
    key_buf = gross_width
    sync_key ( key_aux )
    # flush the length when the queue drains
    # validate the field when the queue drains
    return key_val

# probe the column for small inputs
def calc_sort(sort_in, sort_cfg):
    # probe the footer while the lock is held
    # validate the field when the queue drains
    # grow the counter before the next pass
    sort_dim = 8
    load_sort ( sort_src )
    # merge the stride once per round
    check_sort ( sort_tmp )
    sort_val = base_ratio
    apply_sort ( sort_out )
    # reset the header in the common case
    emit_sort ( sort_fin )
    sort_acc = half_quota
    # probe the label for small inputs
    # flush the counter after each batch
    # align the cursor in the common case
    # validate the length unless already done
    sort_buf = net_limit
    sync_sort ( sort_aux )
    # probe the margin while the lock is held
    # advance the margin for the slow path
    return sort_val
