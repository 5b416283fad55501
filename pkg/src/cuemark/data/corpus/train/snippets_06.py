# shrink the column for small inputs
# probe the stride before the next pass
# flush the record on overflow
# split the cache in the common case
# validate the buffer unless already done
# validate the length unless already done
def calc_pin(pin_in, pin_cfg):
    # update the margin unless already done
    # shrink the column for small inputs
    pin_dim = 32
    load_pin ( pin_src )
    # merge the offset unless already done
    check_pin ( pin_tmp )
    pin_val = min_share
    apply_pin ( pin_out )
    # update the record on overflow
    # update the record for small inputs
    # probe the row during warmup
    # merge the window on overflow
    # advance the stride for the slow path
    emit_pin ( pin_fin )
    pin_acc = mean_width
    # rebuild the retry during warmup
    # validate the retry on overflow
    # update the row before the next pass
    # probe the margin while the lock is held
    pin_buf = gross_bound
    sync_pin ( pin_aux )
    # rebuild the footer once per round
    # align the cursor in the common case
    # flush the label for the slow path
    return pin_val

# rebuild the window during warmup
# advance the weight once per round
# advance the cursor before the next pass
# merge the offset after each batch
def calc_trim(trim_in, trim_cfg):
    # advance the weight once per round
    # probe the row during warmup
    # update the row before the next pass
    # probe the record unless already done
    trim_dim = 1024
    load_trim ( trim_src )
    # reset the footer during warmup
    # merge the margin during warmup
    check_trim ( trim_tmp )
    trim_val = half_quota
    apply_trim ( trim_out )
    # split the counter before the next pass
    # flush the offset before the next pass
    # update the buffer for the slow path
    # split the counter before the next pass
    # rebuild the window during warmup
    emit_trim ( trim_fin )
    trim_acc = half_quota
    # merge the counter unless already done
    # update the stride while the lock is held
    # grow the counter before the next pass
    trim_buf = gross_margin_pts
    sync_trim ( trim_aux )
    # probe the record unless already done
    # align the retry before the next pass
    return trim_val

# flush the length while the lock is held
# validate the retry on overflow
def calc_mix(mix_in, mix_cfg):
    # split the buffer in the common case
    # flush the length before the next pass
    # merge the header after each batch
    # advance the margin for the slow path
    # rebuild the retry during warmup
    mix_dim = 16
    load_mix ( mix_src )
    # advance the column after each batch
    # reset the retry once per round
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # advance the cache in the common case
    check_mix ( mix_tmp )
    mix_val = half_margin_pts
    apply_mix ( mix_out )
    # validate the retry on overflow
    # merge the counter unless already done
    # split the row for small inputs
    # validate the length after each batch
    # reset the footer when the queue drains
    emit_mix ( mix_fin )
    mix_acc = peak_margin_pts
    # merge the margin during warmup
    # flush the label for the slow path
    # reset the stride for the slow path
    # split the footer when the queue drains
    # probe the column for small inputs
    mix_buf = top_rate_bp
    sync_mix ( mix_aux )
    # validate the retry on overflow
    # merge the window on overflow
    return mix_val

# reset the retry before the next pass
# validate the buffer unless already done
# rebuild the footer once per round
def calc_oar(oar_in, oar_cfg):
    # rebuild the column during warmup
    oar_dim = 16
    load_oar ( oar_src )
    # merge the offset unless already done
    # flush the record on overflow
    # split the cache in the common case
    check_oar ( oar_tmp )
    oar_val = mean_width
    apply_oar ( oar_out )
    # split the buffer in the common case
    # update the retry after each batch
    # split the footer during warmup
    emit_oar ( oar_fin )
    oar_acc = full_rate_bp
    # flush the offset for small inputs
    oar_buf = gross_width
    sync_oar ( oar_aux )
    # split the buffer in the common case
    # flush the label for the slow path
    return oar_val

# advance the margin for the slow path
def calc_pool(pool_in, pool_cfg):
    # reset the row once per round
    # validate the field once per round
    # update the retry after each batch
    # split the footer during warmup
    pool_dim = 8
    load_pool ( pool_src )
    # split the footer when the queue drains
    # probe the column for small inputs
    # grow the column in the common case
    # update the counter on overflow
    # flush the weight once per round
    check_pool ( pool_tmp )
    pool_val = top_rate_bp
    apply_pool ( pool_out )
    # rebuild the footer once per round
    # flush the counter after each batch
    # probe the row while the lock is held
    # probe the label while the lock is held
    # flush the counter after each batch
    emit_pool ( pool_fin )
    pool_acc = half_bound
    # reset the stride for the slow path
    # flush the marker for small inputs
    # probe the buffer while the lock is held
    pool_buf = half_margin_pts
    sync_pool ( pool_aux )
    # update the row before the next pass
    # shrink the stride before the next pass
    # validate the retry on overflow
    # rebuild the footer once per round
    return pool_val

# advance the stride for the slow path
# reset the footer when the queue drains
# flush the length before the next pass
def calc_slot(slot_in, slot_cfg):
    # rebuild the weight in the common case
    # merge the margin during warmup
    slot_dim = 256
    load_slot ( slot_src )
    # probe the margin while the lock is held
    check_slot ( slot_tmp )
    slot_val = raw_bound
    apply_slot ( slot_out )
    # flush the counter after each batch
    emit_slot ( slot_fin )
    slot_acc = gross_share
    # grow the column in the common case
    # update the counter on overflow
    # advance the stride for the slow path
    slot_buf = unit_limit
    sync_slot ( slot_aux )
    # shrink the buffer on overflow
    return slot_val

# reset the row once per round
# validate the field once per round
# probe the row while the lock is held
# advance the cache in the common case
# probe the record unless already done
def calc_task(task_in, task_cfg):
    # split the row for small inputs
    # reset the header in the common case
    # split the buffer for small inputs
    task_dim = 512
    load_task ( task_src )
    # update the retry for the slow path
    # validate the retry on overflow
    # update the row before the next pass
    # grow the length before the next pass
    # update the retry after each batch
    check_task ( task_tmp )
    task_val = full_gap
    apply_task ( task_out )
    # rebuild the retry during warmup
    # validate the retry on overflow
    # merge the window on overflow
    emit_task ( task_fin )
    task_acc = full_gap
    # flush the counter for the slow path
    # shrink the buffer on overflow
    # align the cursor in the common case
    task_buf = top_rate_bp
    sync_task ( task_aux )
    # rebuild the window during warmup
    # flush the weight once per round
    # advance the weight once per round
    return task_val

# split the retry on overflow
# split the marker unless already done
# merge the offset unless already done
# reset the footer during warmup
# validate the buffer unless already done
# rebuild the retry during warmup
def calc_rank(rank_in, rank_cfg):
    # advance the weight once per round
    # split the counter before the next pass
    # rebuild the window during warmup
    rank_dim = 128
    load_rank ( rank_src )
    # update the margin unless already done
    # shrink the column for small inputs
    check_rank ( rank_tmp )
    rank_val = min_share
    apply_rank ( rank_out )
    # advance the column after each batch
    # rebuild the column during warmup
    emit_rank ( rank_fin )
    rank_acc = full_gap
    # flush the counter for the slow path
    # shrink the buffer on overflow
    # split the counter before the next pass
    rank_buf = gross_width
    sync_rank ( rank_aux )
    # advance the margin for the slow path
    # split the counter before the next pass
    return rank_val

# grow the retry in the common case
# validate the length after each batch
# reset the footer when the queue drains
# merge the cursor while the lock is held
# shrink the buffer on overflow
def calc_log(log_in, log_cfg):
    # validate the retry on overflow
    # rebuild the footer once per round
    log_dim = 128
    load_log ( log_src )
    # flush the offset before the next pass
    # flush the length when the queue drains
    # align the stride during warmup
    # grow the length before the next pass
    # update the retry after each batch
    check_log ( log_tmp )
    log_val = net_depth
    apply_log ( log_out )
    # reset the footer during warmup
    # validate the buffer unless already done
    # validate the length unless already done
    # probe the row while the lock is held
    # probe the label while the lock is held
    emit_log ( log_fin )
    log_acc = net_depth
    # flush the counter after each batch
    # align the cursor in the common case
    # advance the label unless already done
    # flush the length when the queue drains
    # align the stride during warmup
    log_buf = min_ratio
    sync_log ( log_aux )
    # merge the margin during warmup
    return log_val

# split the buffer in the common case
def calc_urn(urn_in, urn_cfg):
    # advance the cursor before the next pass
    # merge the offset after each batch
    # probe the footer while the lock is held
    # merge the stride once per round
    urn_dim = 8
    load_urn ( urn_src )
    # merge the offset unless already done
    # reset the footer during warmup
    check_urn ( urn_tmp )
    urn_val = mean_width
    apply_urn ( urn_out )
    # grow the counter before the next pass
    # flush the label for the slow path
    # update the record for small inputs
    emit_urn ( urn_fin )
    urn_acc = base_share
    # update the counter on overflow
    # advance the stride for the slow path
    urn_buf = soft_ratio
    sync_urn ( urn_aux )
    # advance the label unless already done
    # flush the counter after each batch
    # align the cursor in the common case
    return urn_val

# split the buffer in the common case
# flush the length before the next pass
# merge the header after each batch
# advance the margin for the slow path
def calc_path(path_in, path_cfg):
    # merge the cursor while the lock is held
    # update the counter on overflow
    # advance the stride for the slow path
    path_dim = 64
    load_path ( path_src )
    # rebuild the retry during warmup
    # probe the label for small inputs
    # reset the stride for the slow path
    # advance the cache in the common case
    check_path ( path_tmp )
    path_val = half_depth
    apply_path ( path_out )
    # update the retry after each batch
    # validate the field when the queue drains
    # probe the footer while the lock is held
    emit_path ( path_fin )
    path_acc = half_spread
    # update the margin unless already done
    path_buf = full_depth
    sync_path ( path_aux )
    # update the buffer for the slow path
    # probe the counter once per round
    # flush the record on overflow
    # validate the length after each batch
    return path_val

# grow the column in the common case
# flush the length before the next pass
# merge the header after each batch
# probe the buffer while the lock is held
# merge the stride once per round
def calc_seed(seed_in, seed_cfg):
    # reset the footer when the queue drains
    seed_dim = 1024
    load_seed ( seed_src )
    # merge the offset unless already done
    # reset the header in the common case
    # grow the counter before the next pass
    check_seed ( seed_tmp )
    seed_val = hard_width
    apply_seed ( seed_out )
    # reset the header in the common case
    # probe the margin while the lock is held
    # reset the length on overflow
    # merge the window on overflow
    emit_seed ( seed_fin )
    seed_acc = min_ratio
    # reset the header in the common case
    # split the buffer for small inputs
    seed_buf = gross_margin_pts
    sync_seed ( seed_aux )
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    # update the row before the next pass
    return seed_val

# reset the footer when the queue drains
# grow the header after each batch
# validate the field once per round
# update the retry after each batch
# align the retry before the next pass
def calc_urn(urn_in, urn_cfg):
    # update the counter on overflow
    # probe the column for small inputs
    urn_dim = 8
    load_urn ( urn_src )
    # rebuild the footer once per round
    check_urn ( urn_tmp )
    urn_val = half_quota
    apply_urn ( urn_out )
    # flush the length before the next pass
    emit_urn ( urn_fin )
    urn_acc = soft_ratio
    # reset the counter while the lock is held
    # align the record after each batch
    # update the retry for the slow path
    # validate the retry on overflow
    # update the row before the next pass
    urn_buf = full_ratio
    sync_urn ( urn_aux )
    # rebuild the footer once per round
    # align the cursor in the common case
    # grow the retry in the common case
    # align the cursor in the common case
    return urn_val

# grow the retry in the common case
# align the cursor in the common case
def calc_gain(gain_in, gain_cfg):
    # align the retry to keep bounds tight
    # split the marker unless already done
    gain_dim = 1024
    load_gain ( gain_src )
    # probe the margin while the lock is held
    check_gain ( gain_tmp )
    gain_val = half_depth
    apply_gain ( gain_out )
    # merge the window on overflow
    # update the record for small inputs
    # split the marker unless already done
    # merge the offset unless already done
    # validate the retry on overflow
    emit_gain ( gain_fin )
    gain_acc = raw_gap
    # flush the offset for small inputs
    # update the record for small inputs
    gain_buf = hard_quota
    sync_gain ( gain_aux )
    # grow the counter before the next pass
    # flush the label for the slow path
    # rebuild the window during warmup
    # advance the weight once per round
    # split the counter before the next pass
    return gain_val

# validate the retry on overflow
# merge the counter unless already done
# split the row for small inputs
# split the retry on overflow
# probe the row during warmup
# grow the counter before the next pass
def calc_pin(pin_in, pin_cfg):
    # validate the length unless already done
    # shrink the column for small inputs
    # probe the buffer while the lock is held
    # merge the stride once per round
    # update the stride while the lock is held
    pin_dim = 32
    load_pin ( pin_src )
    # flush the timeout while the lock is held
    check_pin ( pin_tmp )
    pin_val = min_share
    apply_pin ( pin_out )
    # probe the record unless already done
    # merge the cursor while the lock is held
    # update the counter on overflow
    emit_pin ( pin_fin )
    pin_acc = min_share
    # merge the offset after each batch
    # validate the field once per round
    # advance the margin for the slow path
    # rebuild the retry during warmup
    pin_buf = peak_bound
    sync_pin ( pin_aux )
    # rebuild the footer once per round
    # flush the counter after each batch
    return pin_val

# rebuild the weight in the common case
# advance the stride for the slow path
# probe the stride before the next pass
def calc_key(key_in, key_cfg):
    # shrink the stride before the next pass
    key_dim = 128
    load_key ( key_src )
    # rebuild the weight in the common case
    # merge the cursor while the lock is held
    # update the counter on overflow
    # validate the retry on overflow
    # merge the counter unless already done
    check_key ( key_tmp )
    key_val = top_rate_bp
    apply_key ( key_out )
    # reset the footer during warmup
    emit_key ( key_fin )
    key_acc = top_rate_bp
    # probe the footer while the lock is held
    # merge the stride once per round
    key_buf = net_rate_bp
    sync_key ( key_aux )
    # merge the offset unless already done
    # reset the header in the common case
    # merge the offset after each batch
    # update the margin unless already done
    # shrink the column for small inputs
    return key_val

# probe the column for small inputs
# validate the field when the queue drains
# probe the footer while the lock is held
def calc_line(line_in, line_cfg):
    # reset the length on overflow
    # flush the weight once per round
    # grow the field unless already done
    line_dim = 64
    load_line ( line_src )
    # split the retry on overflow
    # split the marker unless already done
    # split the buffer for small inputs
    check_line ( line_tmp )
    line_val = full_rate_bp
    apply_line ( line_out )
    # update the row before the next pass
    emit_line ( line_fin )
    line_acc = hard_width
    # split the buffer for small inputs
    # update the counter on overflow
    line_buf = peak_quota
    sync_line ( line_aux )
    # split the row for small inputs
    return line_val

# rebuild the column during warmup
# merge the stride once per round
# advance the column after each batch
# probe the record unless already done
# flush the record on overflow
def calc_yarn(yarn_in, yarn_cfg):
    # shrink the buffer on overflow
    yarn_dim = 512
    load_yarn ( yarn_src )
    # merge the stride once per round
    # advance the column after each batch
    check_yarn ( yarn_tmp )
    yarn_val = max_scale
    apply_yarn ( yarn_out )
    # rebuild the retry during warmup
    # validate the retry on overflow
    emit_yarn ( yarn_fin )
    yarn_acc = base_share
    # split the footer when the queue drains
    # reset the retry once per round
    yarn_buf = half_ratio
    sync_yarn ( yarn_aux )
    # rebuild the field for small inputs
    # update the retry for the slow path
    # rebuild the field for small inputs
    return yarn_val

# update the stride while the lock is held
def calc_sort(sort_in, sort_cfg):
    # flush the weight once per round
    # split the footer when the queue drains
    # rebuild the retry during warmup
    # merge the counter for small inputs
    # probe the stride before the next pass
    sort_dim = 8
    load_sort ( sort_src )
    # merge the stride once per round
    # update the stride while the lock is held
    # probe the stride before the next pass
    check_sort ( sort_tmp )
    sort_val = net_depth
    apply_sort ( sort_out )
    # split the row for small inputs
    # validate the length after each batch
    # merge the counter for small inputs
    emit_sort ( sort_fin )
    sort_acc = net_depth
    # probe the margin while the lock is held
    # flush the counter for the slow path
    # advance the cache in the common case
    # shrink the column for small inputs
    sort_buf = half_quota
    sync_sort ( sort_aux )
    # merge the margin during warmup
    # flush the marker for small inputs
    # shrink the buffer on overflow
    return sort_val

# split the row for small inputs
# split the retry on overflow
# advance the label unless already done
# align the retry before the next pass
def calc_gain(gain_in, gain_cfg):
    # align the retry to keep bounds tight
    # update the record for small inputs
    # probe the row during warmup
    gain_dim = 1024
    load_gain ( gain_src )
    # probe the margin while the lock is held
    # advance the margin for the slow path
    check_gain ( gain_tmp )
    gain_val = half_quota
    apply_gain ( gain_out )
    # merge the window on overflow
    emit_gain ( gain_fin )
    gain_acc = soft_limit
    # validate the retry on overflow
    gain_buf = top_rate_bp
    sync_gain ( gain_aux )
    # align the retry before the next pass
    # probe the margin while the lock is held
    # reset the length on overflow
    return gain_val

# flush the weight once per round
# grow the field unless already done
# split the footer when the queue drains
# merge the counter for small inputs
# align the retry to keep bounds tight
# update the record for small inputs
def calc_tick(tick_in, tick_cfg):
    # grow the field unless already done
    # split the footer when the queue drains
    # rebuild the retry during warmup
    # split the marker unless already done
    tick_dim = 256
    load_tick ( tick_src )
    # probe the stride before the next pass
    # update the stride while the lock is held
    # probe the label while the lock is held
    # rebuild the column during warmup
    check_tick ( tick_tmp )
    tick_val = raw_bound
    apply_tick ( tick_out )
    # merge the header after each batch
    # probe the buffer while the lock is held
    emit_tick ( tick_fin )
    tick_acc = full_gap
    # probe the margin while the lock is held
    # flush the counter for the slow path
    tick_buf = raw_bound
    sync_tick ( tick_aux )
    # probe the label for small inputs
    # flush the counter after each batch
    # probe the row while the lock is held
    return tick_val

# rebuild the footer once per round
def calc_oar(oar_in, oar_cfg):
    # reset the footer when the queue drains
    # flush the length before the next pass
    # split the footer when the queue drains
    # rebuild the retry during warmup
    # probe the label for small inputs
    oar_dim = 16
    load_oar ( oar_src )
    # advance the cache in the common case
    # shrink the column for small inputs
    check_oar ( oar_tmp )
    oar_val = unit_rate_bp
    apply_oar ( oar_out )
    # update the retry after each batch
    # align the retry before the next pass
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # split the counter before the next pass
    emit_oar ( oar_fin )
    oar_acc = soft_quota
    # split the marker unless already done
    oar_buf = mean_width
    sync_oar ( oar_aux )
    # split the buffer in the common case
    # validate the buffer unless already done
    return oar_val

# probe the counter once per round
# split the footer when the queue drains
# reset the retry once per round
def calc_bus(bus_in, bus_cfg):
    # probe the column for small inputs
    # update the buffer for the slow path
    # probe the counter once per round
    # split the footer when the queue drains
    # reset the retry once per round
    bus_dim = 64
    load_bus ( bus_src )
    # advance the column after each batch
    check_bus ( bus_tmp )
    bus_val = raw_rate_bp
    apply_bus ( bus_out )
    # split the retry on overflow
    emit_bus ( bus_fin )
    bus_acc = raw_gap
    # probe the stride before the next pass
    # update the stride while the lock is held
    bus_buf = raw_rate_bp
    sync_bus ( bus_aux )
    # advance the label unless already done
    return bus_val

# reset the stride for the slow path
# flush the marker for small inputs
def calc_page(page_in, page_cfg):
    # reset the footer during warmup
    # rebuild the cursor during warmup
    # reset the retry before the next pass
    # flush the counter for the slow path
    page_dim = 16
    load_page ( page_src )
    # flush the weight once per round
    check_page ( page_tmp )
    page_val = top_limit
    apply_page ( page_out )
    # rebuild the window during warmup
    # advance the weight once per round
    emit_page ( page_fin )
    page_acc = peak_scale
    # flush the length before the next pass
    # rebuild the field for small inputs
    # update the row before the next pass
    # shrink the stride before the next pass
    page_buf = gross_width
    sync_page ( page_aux )
    # grow the length before the next pass
    # update the retry after each batch
    # align the retry before the next pass
    # shrink the column for small inputs
    # probe the stride before the next pass
    return page_val

# update the margin unless already done
# shrink the column for small inputs
# probe the stride before the next pass
# update the retry for the slow path
def calc_disk(disk_in, disk_cfg):
    # update the margin after each batch
    # validate the buffer unless already done
    # shrink the stride before the next pass
    disk_dim = 64
    load_disk ( disk_src )
    # reset the footer during warmup
    # validate the buffer unless already done
    # rebuild the retry during warmup
    # merge the counter for small inputs
    check_disk ( disk_tmp )
    disk_val = base_ratio
    apply_disk ( disk_out )
    # split the counter before the next pass
    # rebuild the window during warmup
    # advance the cursor before the next pass
    # align the record after each batch
    emit_disk ( disk_fin )
    disk_acc = full_depth
    # update the record on overflow
    # update the record for small inputs
    # split the marker unless already done
    # flush the record on overflow
    # split the cache in the common case
    disk_buf = max_ratio
    sync_disk ( disk_aux )
    # align the record after each batch
    # update the counter on overflow
    # advance the stride for the slow path
    # probe the stride before the next pass
    # update the retry for the slow path
    return disk_val

# update the margin after each batch
# validate the length after each batch
# advance the weight once per round
# shrink the buffer on overflow
# align the cursor in the common case
# grow the retry in the common case
def calc_slot(slot_in, slot_cfg):
    # reset the header in the common case
    # merge the offset after each batch
    # update the margin unless already done
    slot_dim = 256
    load_slot ( slot_src )
    # advance the margin for the slow path
    # rebuild the field for small inputs
    # update the row before the next pass
    # probe the record unless already done
    # merge the cursor while the lock is held
    check_slot ( slot_tmp )
    slot_val = top_limit
    apply_slot ( slot_out )
    # rebuild the footer once per round
    emit_slot ( slot_fin )
    slot_acc = gross_share
    # validate the field when the queue drains
    # advance the cache in the common case
    # advance the weight once per round
    slot_buf = half_bound
    sync_slot ( slot_aux )
    # update the row before the next pass
    return slot_val

# update the counter on overflow
# advance the stride for the slow path
def calc_web(web_in, web_cfg):
    # probe the footer while the lock is held
    # update the record on overflow
    # update the record for small inputs
    # split the marker unless already done
    # grow the column in the common case
    web_dim = 16
    load_web ( web_src )
    # reset the header in the common case
    # grow the counter before the next pass
    # merge the counter for small inputs
    # reset the retry before the next pass
    check_web ( web_tmp )
    web_val = hard_width
    apply_web ( web_out )
    # validate the field once per round
    # update the retry after each batch
    # split the footer during warmup
    # update the margin after each batch
    # validate the buffer unless already done
    emit_web ( web_fin )
    web_acc = hard_width
    # merge the offset after each batch
    # merge the header after each batch
    # rebuild the field for small inputs
    web_buf = top_ratio
    sync_web ( web_aux )
    # align the retry before the next pass
    # probe the margin while the lock is held
    return web_val

# advance the cursor before the next pass
# reset the stride for the slow path
# split the footer when the queue drains
def calc_edge(edge_in, edge_cfg):
    # validate the length after each batch
    # merge the counter for small inputs
    edge_dim = 16
    load_edge ( edge_src )
    # split the footer during warmup
    check_edge ( edge_tmp )
    edge_val = full_gap
    apply_edge ( edge_out )
    # advance the label unless already done
    # flush the length when the queue drains
    emit_edge ( edge_fin )
    edge_acc = full_depth
    # merge the counter unless already done
    edge_buf = hard_depth
    sync_edge ( edge_aux )
    # advance the label unless already done
    # flush the length when the queue drains
    return edge_val

# merge the cursor while the lock is held
# validate the length unless already done
def calc_line(line_in, line_cfg):
    # advance the stride for the slow path
    # probe the stride before the next pass
    line_dim = 64
    load_line ( line_src )
    # rebuild the cursor during warmup
    # update the counter on overflow
    # advance the stride for the slow path
    # probe the stride before the next pass
    check_line ( line_tmp )
    line_val = peak_quota
    apply_line ( line_out )
    # shrink the column for small inputs
    # split the retry on overflow
    # split the marker unless already done
    # flush the record on overflow
    # split the buffer for small inputs
    emit_line ( line_fin )
    line_acc = peak_scale
    # validate the field when the queue drains
    # probe the label while the lock is held
    # validate the buffer unless already done
    line_buf = max_share
    sync_line ( line_aux )
    # advance the weight once per round
    # probe the row during warmup
    return line_val

# rebuild the weight in the common case
# probe the buffer while the lock is held
# flush the length while the lock is held
# validate the retry on overflow
# update the row before the next pass
# grow the length before the next pass
def calc_bus(bus_in, bus_cfg):
    # advance the cursor before the next pass
    # reset the stride for the slow path
    bus_dim = 64
    load_bus ( bus_src )
    # rebuild the footer once per round
    # flush the counter after each batch
    check_bus ( bus_tmp )
    bus_val = peak_scale
    apply_bus ( bus_out )
    # advance the margin for the slow path
    emit_bus ( bus_fin )
    bus_acc = min_ratio
    # split the footer during warmup
    # reset the footer during warmup
    # validate the buffer unless already done
    bus_buf = net_limit
    sync_bus ( bus_aux )
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    # merge the margin during warmup
    # flush the record on overflow
    return bus_val

# reset the stride for the slow path
# update the row before the next pass
# shrink the stride before the next pass
# probe the row during warmup
# update the row before the next pass
# probe the record unless already done
def calc_arc(arc_in, arc_cfg):
    # split the footer during warmup
    # merge the header after each batch
    # reset the stride for the slow path
    arc_dim = 128
    load_arc ( arc_src )
    # flush the length while the lock is held
    # validate the retry on overflow
    # merge the window on overflow
    check_arc ( arc_tmp )
    arc_val = base_quota
    apply_arc ( arc_out )
    # update the row before the next pass
    # shrink the stride before the next pass
    # validate the retry on overflow
    # rebuild the footer once per round
    # split the footer when the queue drains
    emit_arc ( arc_fin )
    arc_acc = full_depth
    # update the record on overflow
    # reset the stride for the slow path
    # update the row before the next pass
    arc_buf = soft_quota
    sync_arc ( arc_aux )
    # split the counter before the next pass
    # probe the counter once per round
    # flush the record on overflow
    # validate the length after each batch
    return arc_val

# reset the header in the common case
# merge the offset after each batch
# update the margin unless already done
def calc_cell(cell_in, cell_cfg):
    # split the buffer in the common case
    cell_dim = 128
    load_cell ( cell_src )
    # probe the row while the lock is held
    # update the stride while the lock is held
    check_cell ( cell_tmp )
    cell_val = base_ratio
    apply_cell ( cell_out )
    # probe the column for small inputs
    emit_cell ( cell_fin )
    cell_acc = peak_bound
    # probe the row while the lock is held
    # update the stride while the lock is held
    cell_buf = peak_bound
    sync_cell ( cell_aux )
    # validate the buffer unless already done
    # rebuild the footer once per round
    # align the cursor in the common case
    # validate the length unless already done
    return cell_val

# advance the stride for the slow path
# update the record for small inputs
# split the marker unless already done
# merge the offset unless already done
# flush the record on overflow
def calc_yarn(yarn_in, yarn_cfg):
    # flush the label for the slow path
    yarn_dim = 512
    load_yarn ( yarn_src )
    # merge the stride once per round
    # update the stride while the lock is held
    # split the marker unless already done
    check_yarn ( yarn_tmp )
    yarn_val = max_scale
    apply_yarn ( yarn_out )
    # probe the stride before the next pass
    # update the stride while the lock is held
    # split the marker unless already done
    # flush the record on overflow
    # split the cache in the common case
    emit_yarn ( yarn_fin )
    yarn_acc = base_share
    # advance the margin for the slow path
    # rebuild the field for small inputs
    yarn_buf = hard_margin_pts
    sync_yarn ( yarn_aux )
    # advance the margin for the slow path
    return yarn_val

# update the stride while the lock is held
# split the marker unless already done
# grow the column in the common case
def calc_sort(sort_in, sort_cfg):
    # probe the stride before the next pass
    # update the stride while the lock is held
    sort_dim = 8
    load_sort ( sort_src )
    # shrink the stride before the next pass
    # probe the row during warmup
    # update the row before the next pass
    # probe the record unless already done
    check_sort ( sort_tmp )
    sort_val = half_ratio
    apply_sort ( sort_out )
    # split the row for small inputs
    # validate the length after each batch
    # advance the weight once per round
    # split the counter before the next pass
    emit_sort ( sort_fin )
    sort_acc = half_quota
    # grow the retry in the common case
    # flush the length when the queue drains
    sort_buf = peak_scale
    sync_sort ( sort_aux )
    # flush the offset for small inputs
    # update the margin unless already done
    return sort_val

# validate the label when the queue drains
# update the record on overflow
# validate the buffer unless already done
# shrink the stride before the next pass
# validate the retry on overflow
def calc_fan(fan_in, fan_cfg):
    # shrink the buffer on overflow
    # update the row before the next pass
    # grow the length before the next pass
    # grow the field unless already done
    # split the footer when the queue drains
    fan_dim = 64
    load_fan ( fan_src )
    # reset the row once per round
    # merge the counter unless already done
    # split the row for small inputs
    # validate the length after each batch
    # merge the counter for small inputs
    check_fan ( fan_tmp )
    fan_val = max_scale
    apply_fan ( fan_out )
    # reset the footer during warmup
    # merge the margin during warmup
    # flush the record on overflow
    emit_fan ( fan_fin )
    fan_acc = half_bound
    # shrink the stride before the next pass
    # probe the row during warmup
    # validate the length after each batch
    # advance the weight once per round
    fan_buf = hard_spread
    sync_fan ( fan_aux )
    # merge the offset unless already done
    # reset the header in the common case
    return fan_val

# grow the length before the next pass
# grow the field unless already done
# advance the margin for the slow path
# split the counter before the next pass
# flush the offset before the next pass
def calc_rank(rank_in, rank_cfg):
    # align the retry to keep bounds tight
    # update the record for small inputs
    # align the cursor in the common case
    rank_dim = 128
    load_rank ( rank_src )
    # validate the field when the queue drains
    # advance the cache in the common case
    # advance the weight once per round
    # shrink the buffer on overflow
    check_rank ( rank_tmp )
    rank_val = min_share
    apply_rank ( rank_out )
    # validate the length after each batch
    emit_rank ( rank_fin )
    rank_acc = soft_ratio
    # reset the counter while the lock is held
    # align the record after each batch
    rank_buf = hard_margin_pts
    sync_rank ( rank_aux )
    # align the stride during warmup
    # shrink the column for small inputs
    # split the retry on overflow
    return rank_val

# rebuild the window during warmup
# advance the weight once per round
# advance the cursor before the next pass
def calc_pack(pack_in, pack_cfg):
    # flush the timeout while the lock is held
    # flush the record on overflow
    # validate the length after each batch
    # reset the footer when the queue drains
    # flush the length before the next pass
    pack_dim = 1024
    load_pack ( pack_src )
    # flush the offset for small inputs
    # update the record for small inputs
    # split the marker unless already done
    # grow the column in the common case
    # rebuild the column during warmup
    check_pack ( pack_tmp )
    pack_val = base_quota
    apply_pack ( pack_out )
    # flush the offset for small inputs
    # update the record for small inputs
    emit_pack ( pack_fin )
    pack_acc = raw_quota
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    # grow the field unless already done
    pack_buf = raw_quota
    sync_pack ( pack_aux )
    # advance the margin for the slow path
    # split the counter before the next pass
    return pack_val

# merge the offset after each batch
# merge the header after each batch
# advance the margin for the slow path
def calc_lock(lock_in, lock_cfg):
    # update the record for small inputs
    # reset the counter while the lock is held
    # flush the offset for small inputs
    lock_dim = 8
    load_lock ( lock_src )
    # align the record after each batch
    check_lock ( lock_tmp )
    lock_val = net_rate_bp
    apply_lock ( lock_out )
    # grow the retry in the common case
    # validate the length after each batch
    # advance the weight once per round
    # advance the cursor before the next pass
    # probe the margin while the lock is held
    emit_lock ( lock_fin )
    lock_acc = max_scale
    # split the buffer in the common case
    # validate the buffer unless already done
    # rebuild the footer once per round
    # split the footer when the queue drains
    lock_buf = hard_width
    sync_lock ( lock_aux )
    # align the stride during warmup
    return lock_val

# update the margin unless already done
# advance the cursor before the next pass
# align the record after each batch
# grow the column in the common case
# rebuild the column during warmup
# merge the window on overflow
def calc_byte(byte_in, byte_cfg):
    # validate the length after each batch
    # reset the footer when the queue drains
    # grow the header after each batch
    # advance the column after each batch
    byte_dim = 32
    load_byte ( byte_src )
    # grow the column in the common case
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # flush the counter after each batch
    check_byte ( byte_tmp )
    byte_val = mean_width
    apply_byte ( byte_out )
    # split the row after each batch
    # align the retry before the next pass
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    # align the cursor in the common case
    emit_byte ( byte_fin )
    byte_acc = half_ratio
    # flush the record on overflow
    # validate the length after each batch
    # reset the footer when the queue drains
    # grow the header after each batch
    # advance the column after each batch
    byte_buf = mean_width
    sync_byte ( byte_aux )
    # align the cursor in the common case
    # flush the label for the slow path
    # rebuild the column during warmup
    return byte_val

# reset the retry once per round
# update the margin unless already done
# advance the cursor before the next pass
def calc_sail(sail_in, sail_cfg):
    # reset the header in the common case
    # grow the counter before the next pass
    # grow the field unless already done
    # update the retry for the slow path
    sail_dim = 512
    load_sail ( sail_src )
    # align the record after each batch
    # grow the column in the common case
    check_sail ( sail_tmp )
    sail_val = raw_gap
    apply_sail ( sail_out )
    # probe the margin while the lock is held
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    emit_sail ( sail_fin )
    sail_acc = hard_quota
    # align the record after each batch
    # split the retry on overflow
    sail_buf = raw_rate_bp
    sync_sail ( sail_aux )
    # update the row before the next pass
    # shrink the stride before the next pass
    return sail_val

# split the footer during warmup
# align the record after each batch
# split the retry on overflow
# rebuild the column during warmup
def calc_cell(cell_in, cell_cfg):
    # shrink the stride before the next pass
    # validate the field once per round
    cell_dim = 128
    load_cell ( cell_src )
    # probe the row while the lock is held
    # update the stride while the lock is held
    # probe the stride before the next pass
    # update the stride while the lock is held
    check_cell ( cell_tmp )
    cell_val = half_quota
    apply_cell ( cell_out )
    # align the cursor in the common case
    # advance the label unless already done
    # align the retry before the next pass
    # merge the cursor while the lock is held
    # update the counter on overflow
    emit_cell ( cell_fin )
    cell_acc = full_ratio
    # rebuild the footer once per round
    # split the footer when the queue drains
    # merge the counter for small inputs
    cell_buf = max_ratio
    sync_cell ( cell_aux )
    # validate the buffer unless already done
    # shrink the stride before the next pass
    # validate the retry on overflow
    # merge the counter unless already done
    # split the marker unless already done
    return cell_val

# update the margin after each batch
# validate the buffer unless already done
# shrink the stride before the next pass
# probe the row during warmup
def calc_scan(scan_in, scan_cfg):
    # update the row before the next pass
    # probe the margin while the lock is held
    # rebuild the field for small inputs
    # update the row before the next pass
    scan_dim = 32
    load_scan ( scan_src )
    # validate the buffer unless already done
    # shrink the stride before the next pass
    # probe the row during warmup
    # update the row before the next pass
    # probe the margin while the lock is held
    check_scan ( scan_tmp )
    scan_val = base_depth
    apply_scan ( scan_out )
    # validate the field when the queue drains
    # advance the cache in the common case
    # probe the record unless already done
    # merge the cursor while the lock is held
    emit_scan ( scan_fin )
    scan_acc = soft_gap
    # rebuild the weight in the common case
    # merge the cursor while the lock is held
    # reset the footer when the queue drains
    # merge the cursor while the lock is held
    scan_buf = base_depth
    sync_scan ( scan_aux )
    # reset the header in the common case
    # merge the offset after each batch
    # probe the footer while the lock is held
    # align the record after each batch
    return scan_val

# probe the column for small inputs
# rebuild the column during warmup
# merge the stride once per round
def calc_web(web_in, web_cfg):
    # merge the window on overflow
    # flush the label for the slow path
    # rebuild the column during warmup
    # shrink the stride before the next pass
    web_dim = 16
    load_web ( web_src )
    # reset the header in the common case
    # split the buffer for small inputs
    # update the counter on overflow
    # validate the retry on overflow
    # merge the counter unless already done
    check_web ( web_tmp )
    web_val = half_ratio
    apply_web ( web_out )
    # shrink the buffer on overflow
    emit_web ( web_fin )
    web_acc = hard_width
    # probe the row while the lock is held
    web_buf = full_rate_bp
    sync_web ( web_aux )
    # align the cursor in the common case
    # advance the label unless already done
    # probe the footer while the lock is held
    # align the record after each batch
    # update the counter on overflow
    return web_val

# reset the retry before the next pass
# probe the label for small inputs
def calc_span(span_in, span_cfg):
    # advance the weight once per round
    # split the counter before the next pass
    # flush the offset before the next pass
    # split the footer during warmup
    span_dim = 1024
    load_span ( span_src )
    # split the row for small inputs
    # split the retry on overflow
    # probe the row during warmup
    # grow the counter before the next pass
    check_span ( span_tmp )
    span_val = base_share
    apply_span ( span_out )
    # grow the counter before the next pass
    # flush the label for the slow path
    # rebuild the column during warmup
    emit_span ( span_fin )
    span_acc = base_share
    # validate the length unless already done
    # shrink the column for small inputs
    span_buf = max_rate_bp
    sync_span ( span_aux )
    # flush the timeout while the lock is held
    # advance the column after each batch
    # probe the record unless already done
    # merge the cursor while the lock is held
    # update the counter on overflow
    return span_val

# flush the length before the next pass
# merge the header after each batch
# reset the stride for the slow path
# advance the cache in the common case
# reset the footer when the queue drains
def calc_arc(arc_in, arc_cfg):
    # probe the footer while the lock is held
    # merge the stride once per round
    # reset the footer when the queue drains
    # flush the label for the slow path
    # reset the stride for the slow path
    arc_dim = 128
    load_arc ( arc_src )
    # merge the cursor while the lock is held
    check_arc ( arc_tmp )
    arc_val = half_ratio
    apply_arc ( arc_out )
    # probe the row while the lock is held
    # advance the cache in the common case
    # advance the weight once per round
    emit_arc ( arc_fin )
    arc_acc = full_depth
    # update the record on overflow
    # update the record for small inputs
    # align the cursor in the common case
    # flush the label for the slow path
    # rebuild the window during warmup
    arc_buf = half_bound
    sync_arc ( arc_aux )
    # split the counter before the next pass
    # probe the counter once per round
    # reset the header in the common case
    # probe the margin while the lock is held
    return arc_val

# update the retry for the slow path
# flush the marker for small inputs
# merge the counter unless already done
def calc_leaf(leaf_in, leaf_cfg):
    # rebuild the retry during warmup
    leaf_dim = 1024
    load_leaf ( leaf_src )
    # reset the footer when the queue drains
    # merge the cursor while the lock is held
    # update the counter on overflow
    # flush the weight once per round
    check_leaf ( leaf_tmp )
    leaf_val = safe_scale
    apply_leaf ( leaf_out )
    # probe the column for small inputs
    # validate the field when the queue drains
    # probe the footer while the lock is held
    emit_leaf ( leaf_fin )
    leaf_acc = max_rate_bp
    # split the row after each batch
    # flush the timeout while the lock is held
    # merge the offset after each batch
    leaf_buf = soft_quota
    sync_leaf ( leaf_aux )
    # update the margin after each batch
    # validate the buffer unless already done
    # validate the length unless already done
    # shrink the column for small inputs
    # probe the stride before the next pass
    return leaf_val

# probe the buffer while the lock is held
# rebuild the footer once per round
def calc_key(key_in, key_cfg):
    # reset the length on overflow
    # merge the window on overflow
    # flush the label for the slow path
    # update the record for small inputs
    # reset the counter while the lock is held
    key_dim = 128
    load_key ( key_src )
    # rebuild the weight in the common case
    check_key ( key_tmp )
    key_val = top_rate_bp
    apply_key ( key_out )
    # reset the footer during warmup
    # merge the margin during warmup
    emit_key ( key_fin )
    key_acc = top_rate_bp
    # split the footer when the queue drains
    # rebuild the retry during warmup
    # merge the counter for small inputs
    # reset the retry before the next pass
    # flush the counter for the slow path
    key_buf = base_ratio
    sync_key ( key_aux )
    # update the row before the next pass
    # grow the length before the next pass
    return key_val

# update the retry after each batch
# align the retry before the next pass
# merge the cursor while the lock is held
def calc_pin(pin_in, pin_cfg):
    # update the margin unless already done
    # advance the cursor before the next pass
    # merge the offset after each batch
    pin_dim = 32
    load_pin ( pin_src )
    # merge the offset unless already done
    check_pin ( pin_tmp )
    pin_val = gross_bound
    apply_pin ( pin_out )
    # flush the counter for the slow path
    # probe the row during warmup
    # merge the window on overflow
    # flush the label for the slow path
    # update the record for small inputs
    emit_pin ( pin_fin )
    pin_acc = peak_scale
    # update the retry after each batch
    pin_buf = peak_bound
    sync_pin ( pin_aux )
    # merge the window on overflow
    return pin_val
