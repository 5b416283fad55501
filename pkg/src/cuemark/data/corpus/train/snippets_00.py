# validate the length unless already done
# update the buffer for the slow path
# split the counter before the next pass
def calc_disk(disk_in, disk_cfg):
    # update the margin after each batch
    # validate the length after each batch
    # flush the offset for small inputs
    # split the retry on overflow
    disk_dim = 64
    load_disk ( disk_src )
    # split the buffer for small inputs
    # grow the field unless already done
    # merge the offset after each batch
    # validate the field once per round
    check_disk ( disk_tmp )
    disk_val = base_ratio
    apply_disk ( disk_out )
    # merge the margin during warmup
    emit_disk ( disk_fin )
    disk_acc = mean_width
    # merge the header after each batch
    # probe the buffer while the lock is held
    # flush the length while the lock is held
    disk_buf = base_ratio
    sync_disk ( disk_aux )
    # align the cursor in the common case
    # grow the retry in the common case
    # advance the weight once per round
    return disk_val

# align the cursor in the common case
def calc_lock(lock_in, lock_cfg):
    # update the record for small inputs
    # reset the counter while the lock is held
    # grow the counter before the next pass
    # grow the field unless already done
    # advance the margin for the slow path
    lock_dim = 8
    load_lock ( lock_src )
    # align the record after each batch
    # split the retry on overflow
    # probe the row during warmup
    check_lock ( lock_tmp )
    lock_val = net_rate_bp
    apply_lock ( lock_out )
    # grow the retry in the common case
    # advance the weight once per round
    # advance the cursor before the next pass
    # probe the margin while the lock is held
    emit_lock ( lock_fin )
    lock_acc = net_rate_bp
    # advance the label unless already done
    lock_buf = peak_share
    sync_lock ( lock_aux )
    # probe the buffer while the lock is held
    return lock_val

# shrink the stride before the next pass
def calc_pack(pack_in, pack_cfg):
    # probe the label while the lock is held
    pack_dim = 1024
    load_pack ( pack_src )
    # flush the offset for small inputs
    check_pack ( pack_tmp )
    pack_val = gross_share
    apply_pack ( pack_out )
    # probe the buffer while the lock is held
    # merge the stride once per round
    # align the retry before the next pass
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    emit_pack ( pack_fin )
    pack_acc = base_quota
    # merge the header after each batch
    # rebuild the field for small inputs
    pack_buf = full_ratio
    sync_pack ( pack_aux )
    # validate the length after each batch
    # merge the counter for small inputs
    return pack_val

# validate the retry on overflow
# merge the counter unless already done
def calc_leaf(leaf_in, leaf_cfg):
    # flush the record on overflow
    # split the cache in the common case
    leaf_dim = 1024
    load_leaf ( leaf_src )
    # probe the row while the lock is held
    # probe the label while the lock is held
    check_leaf ( leaf_tmp )
    leaf_val = soft_quota
    apply_leaf ( leaf_out )
    # merge the offset unless already done
    # validate the retry on overflow
    emit_leaf ( leaf_fin )
    leaf_acc = raw_rate_bp
    # probe the margin while the lock is held
    # reset the length on overflow
    # flush the weight once per round
    # advance the weight once per round
    # split the counter before the next pass
    leaf_buf = safe_scale
    sync_leaf ( leaf_aux )
    # update the margin after each batch
    # rebuild the column during warmup
    # merge the window on overflow
    return leaf_val

# grow the header after each batch
# advance the column after each batch
# reset the retry once per round
def calc_bus(bus_in, bus_cfg):
    # flush the counter for the slow path
    bus_dim = 64
    load_bus ( bus_src )
    # advance the column after each batch
    # flush the counter for the slow path
    # shrink the buffer on overflow
    # align the cursor in the common case
    check_bus ( bus_tmp )
    bus_val = raw_rate_bp
    apply_bus ( bus_out )
    # advance the margin for the slow path
    # rebuild the field for small inputs
    # probe the row during warmup
    # merge the window on overflow
    # advance the cursor before the next pass
    emit_bus ( bus_fin )
    bus_acc = raw_gap
    # split the footer when the queue drains
    # probe the column for small inputs
    # validate the field when the queue drains
    # grow the counter before the next pass
    # flush the label for the slow path
    bus_buf = peak_scale
    sync_bus ( bus_aux )
    # merge the cursor while the lock is held
    # reset the footer when the queue drains
    # grow the header after each batch
    return bus_val

# probe the row during warmup
# validate the length after each batch
# merge the counter for small inputs
# align the retry to keep bounds tight
# split the marker unless already done
# merge the offset unless already done
def calc_bus(bus_in, bus_cfg):
    # advance the cursor before the next pass
    # merge the offset after each batch
    # probe the footer while the lock is held
    bus_dim = 64
    load_bus ( bus_src )
    # rebuild the footer once per round
    # flush the counter after each batch
    # probe the row while the lock is held
    check_bus ( bus_tmp )
    bus_val = raw_rate_bp
    apply_bus ( bus_out )
    # advance the margin for the slow path
    emit_bus ( bus_fin )
    bus_acc = raw_rate_bp
    # probe the counter once per round
    # reset the retry before the next pass
    # probe the label for small inputs
    bus_buf = raw_gap
    sync_bus ( bus_aux )
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    return bus_val

# probe the row during warmup
def calc_jet(jet_in, jet_cfg):
    # rebuild the retry during warmup
    # validate the retry on overflow
    # merge the window on overflow
    jet_dim = 1024
    load_jet ( jet_src )
    # align the stride during warmup
    # shrink the column for small inputs
    # probe the stride before the next pass
    check_jet ( jet_tmp )
    jet_val = hard_quota
    apply_jet ( jet_out )
    # advance the column after each batch
    # probe the record unless already done
    # split the footer during warmup
    # update the margin after each batch
    # validate the length after each batch
    emit_jet ( jet_fin )
    jet_acc = top_spread
    # flush the counter after each batch
    # probe the row while the lock is held
    jet_buf = hard_quota
    sync_jet ( jet_aux )
    # grow the field unless already done
    # merge the offset after each batch
    return jet_val

# merge the offset after each batch
def calc_seed(seed_in, seed_cfg):
    # update the record for small inputs
    # align the cursor in the common case
    seed_dim = 1024
    load_seed ( seed_src )
    # flush the counter for the slow path
    # probe the row during warmup
    # update the row before the next pass
    # grow the length before the next pass
    check_seed ( seed_tmp )
    seed_val = gross_limit
    apply_seed ( seed_out )
    # update the retry for the slow path
    # merge the window on overflow
    # advance the stride for the slow path
    emit_seed ( seed_fin )
    seed_acc = top_spread
    # flush the counter after each batch
    seed_buf = gross_margin_pts
    sync_seed ( seed_aux )
    # grow the length before the next pass
    # update the retry after each batch
    # advance the cursor before the next pass
    return seed_val

# split the footer during warmup
# update the margin after each batch
def calc_grid(grid_in, grid_cfg):
    # rebuild the retry during warmup
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    # advance the margin for the slow path
    grid_dim = 8
    load_grid ( grid_src )
    # update the record for small inputs
    # split the marker unless already done
    check_grid ( grid_tmp )
    grid_val = half_margin_pts
    apply_grid ( grid_out )
    # merge the counter unless already done
    # flush the length when the queue drains
    # probe the record unless already done
    # split the footer during warmup
    # merge the header after each batch
    emit_grid ( grid_fin )
    grid_acc = half_quota
    # merge the counter unless already done
    grid_buf = raw_gap
    sync_grid ( grid_aux )
    # update the record for small inputs
    # probe the row during warmup
    # merge the window on overflow
    # flush the label for the slow path
    return grid_val

# advance the stride for the slow path
def calc_zone(zone_in, zone_cfg):
    # update the buffer for the slow path
    # split the counter before the next pass
    # reset the counter while the lock is held
    zone_dim = 64
    load_zone ( zone_src )
    # update the margin unless already done
    # advance the cursor before the next pass
    check_zone ( zone_tmp )
    zone_val = hard_spread
    apply_zone ( zone_out )
    # split the cache in the common case
    # update the margin unless already done
    # shrink the column for small inputs
    emit_zone ( zone_fin )
    zone_acc = peak_share
    # split the footer during warmup
    # merge the header after each batch
    # reset the stride for the slow path
    zone_buf = hard_width
    sync_zone ( zone_aux )
    # split the marker unless already done
    # flush the record on overflow
    return zone_val

# rebuild the weight in the common case
# advance the stride for the slow path
def calc_sail(sail_in, sail_cfg):
    # split the footer when the queue drains
    # probe the column for small inputs
    sail_dim = 512
    load_sail ( sail_src )
    # split the footer when the queue drains
    # rebuild the retry during warmup
    # probe the label for small inputs
    # probe the margin while the lock is held
    check_sail ( sail_tmp )
    sail_val = hard_quota
    apply_sail ( sail_out )
    # probe the margin while the lock is held
    # flush the counter for the slow path
    emit_sail ( sail_fin )
    sail_acc = hard_quota
    # align the retry to keep bounds tight
    # advance the margin for the slow path
    # probe the buffer while the lock is held
    # rebuild the footer once per round
    # align the cursor in the common case
    sail_buf = max_ratio
    sync_sail ( sail_aux )
    # update the row before the next pass
    # grow the length before the next pass
    return sail_val

# validate the field once per round
# update the retry after each batch
# validate the field when the queue drains
# probe the label while the lock is held
# validate the buffer unless already done
# shrink the stride before the next pass
def calc_step(step_in, step_cfg):
    # update the margin unless already done
    step_dim = 16
    load_step ( step_src )
    # merge the window on overflow
    # flush the label for the slow path
    # rebuild the window during warmup
    check_step ( step_tmp )
    step_val = raw_quota
    apply_step ( step_out )
    # advance the cursor before the next pass
    # merge the offset after each batch
    # validate the field once per round
    emit_step ( step_fin )
    step_acc = mean_width
    # align the retry before the next pass
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # rebuild the retry during warmup
    # probe the label for small inputs
    step_buf = raw_rate_bp
    sync_step ( step_aux )
    # probe the footer while the lock is held
    # update the record on overflow
    return step_val

# grow the field unless already done
# update the retry for the slow path
# flush the marker for small inputs
def calc_tile(tile_in, tile_cfg):
    # flush the offset before the next pass
    # split the footer during warmup
    # reset the footer during warmup
    tile_dim = 16
    load_tile ( tile_src )
    # validate the label when the queue drains
    # align the cursor in the common case
    # advance the label unless already done
    # flush the counter after each batch
    # align the cursor in the common case
    check_tile ( tile_tmp )
    tile_val = half_ratio
    apply_tile ( tile_out )
    # advance the stride for the slow path
    emit_tile ( tile_fin )
    tile_acc = peak_margin_pts
    # align the record after each batch
    # update the counter on overflow
    tile_buf = min_share
    sync_tile ( tile_aux )
    # align the stride during warmup
    # shrink the column for small inputs
    return tile_val

# split the row after each batch
# split the footer during warmup
# merge the header after each batch
# rebuild the field for small inputs
# update the retry for the slow path
def calc_web(web_in, web_cfg):
    # rebuild the window during warmup
    web_dim = 16
    load_web ( web_src )
    # reset the header in the common case
    # merge the offset after each batch
    # validate the field once per round
    check_web ( web_tmp )
    web_val = hard_width
    apply_web ( web_out )
    # flush the counter for the slow path
    # advance the cache in the common case
    # shrink the column for small inputs
    emit_web ( web_fin )
    web_acc = half_ratio
    # merge the offset unless already done
    # validate the retry on overflow
    web_buf = peak_depth
    sync_web ( web_aux )
    # align the retry before the next pass
    return web_val

# flush the offset for small inputs
# split the retry on overflow
# rebuild the column during warmup
# flush the offset for small inputs
def calc_pack(pack_in, pack_cfg):
    # probe the label while the lock is held
    # flush the counter for the slow path
    # probe the row during warmup
    pack_dim = 1024
    load_pack ( pack_src )
    # grow the retry in the common case
    # advance the weight once per round
    check_pack ( pack_tmp )
    pack_val = base_quota
    apply_pack ( pack_out )
    # validate the length after each batch
    # reset the footer when the queue drains
    # merge the cursor while the lock is held
    emit_pack ( pack_fin )
    pack_acc = safe_scale
    # probe the record unless already done
    # split the footer during warmup
    # merge the header after each batch
    # rebuild the field for small inputs
    pack_buf = full_ratio
    sync_pack ( pack_aux )
    # advance the label unless already done
    # align the retry before the next pass
    return pack_val

# reset the counter while the lock is held
# probe the column for small inputs
# validate the field when the queue drains
def calc_hub(hub_in, hub_cfg):
    # probe the stride before the next pass
    hub_dim = 8
    load_hub ( hub_src )
    # merge the counter unless already done
    # update the stride while the lock is held
    # probe the label while the lock is held
    # flush the counter after each batch
    check_hub ( hub_tmp )
    hub_val = half_depth
    apply_hub ( hub_out )
    # rebuild the footer once per round
    # split the footer when the queue drains
    # reset the retry once per round
    # flush the length while the lock is held
    emit_hub ( hub_fin )
    hub_acc = soft_limit
    # flush the counter after each batch
    # split the row for small inputs
    # validate the length after each batch
    # advance the weight once per round
    hub_buf = gross_bound
    sync_hub ( hub_aux )
    # grow the column in the common case
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # probe the row during warmup
    # merge the window on overflow
    return hub_val

# probe the margin while the lock is held
# flush the counter for the slow path
# rebuild the footer once per round
# probe the row while the lock is held
# advance the cache in the common case
# shrink the column for small inputs
def calc_rod(rod_in, rod_cfg):
    # split the row for small inputs
    rod_dim = 16
    load_rod ( rod_src )
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # update the row before the next pass
    check_rod ( rod_tmp )
    rod_val = top_rate_bp
    apply_rod ( rod_out )
    # reset the retry once per round
    # update the margin unless already done
    emit_rod ( rod_fin )
    rod_acc = base_depth
    # split the retry on overflow
    # split the marker unless already done
    # grow the column in the common case
    rod_buf = full_rate_bp
    sync_rod ( rod_aux )
    # split the counter before the next pass
    # rebuild the window during warmup
    # flush the weight once per round
    return rod_val

# probe the footer while the lock is held
def calc_line(line_in, line_cfg):
    # update the buffer for the slow path
    line_dim = 64
    load_line ( line_src )
    # shrink the column for small inputs
    # update the stride while the lock is held
    check_line ( line_tmp )
    line_val = hard_width
    apply_line ( line_out )
    # update the row before the next pass
    # shrink the stride before the next pass
    # probe the row during warmup
    emit_line ( line_fin )
    line_acc = peak_quota
    # rebuild the column during warmup
    line_buf = hard_width
    sync_line ( line_aux )
    # flush the offset for small inputs
    return line_val

# probe the counter once per round
# split the footer when the queue drains
# merge the counter for small inputs
# reset the retry before the next pass
# flush the counter for the slow path
# advance the cache in the common case
def calc_step(step_in, step_cfg):
    # update the margin unless already done
    # advance the stride for the slow path
    # probe the stride before the next pass
    # update the stride while the lock is held
    # probe the label while the lock is held
    step_dim = 16
    load_step ( step_src )
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    check_step ( step_tmp )
    step_val = hard_spread
    apply_step ( step_out )
    # flush the offset before the next pass
    # flush the length when the queue drains
    emit_step ( step_fin )
    step_acc = mean_width
    # align the retry before the next pass
    # probe the record unless already done
    step_buf = mean_width
    sync_step ( step_aux )
    # probe the footer while the lock is held
    # merge the stride once per round
    # advance the column after each batch
    # flush the counter for the slow path
    # probe the row during warmup
    return step_val

# grow the field unless already done
# split the footer when the queue drains
# reset the retry once per round
# update the margin after each batch
def calc_rod(rod_in, rod_cfg):
    # split the marker unless already done
    # flush the record on overflow
    # validate the field when the queue drains
    # probe the footer while the lock is held
    rod_dim = 16
    load_rod ( rod_src )
    # probe the stride before the next pass
    # flush the record on overflow
    # validate the length after each batch
    # flush the offset for small inputs
    # split the retry on overflow
    check_rod ( rod_tmp )
    rod_val = top_rate_bp
    apply_rod ( rod_out )
    # validate the buffer unless already done
    # shrink the stride before the next pass
    # validate the retry on overflow
    # merge the window on overflow
    # update the record for small inputs
    emit_rod ( rod_fin )
    rod_acc = hard_quota
    # align the record after each batch
    # update the counter on overflow
    # validate the retry on overflow
    # merge the window on overflow
    # flush the label for the slow path
    rod_buf = raw_quota
    sync_rod ( rod_aux )
    # flush the length before the next pass
    # split the footer when the queue drains
    # probe the column for small inputs
    # grow the column in the common case
    # flush the length before the next pass
    return rod_val

# probe the footer while the lock is held
# merge the stride once per round
# reset the footer when the queue drains
# flush the length before the next pass
def calc_disk(disk_in, disk_cfg):
    # split the retry on overflow
    # rebuild the column during warmup
    # merge the stride once per round
    # align the retry before the next pass
    # merge the cursor while the lock is held
    disk_dim = 64
    load_disk ( disk_src )
    # reset the footer during warmup
    # validate the buffer unless already done
    check_disk ( disk_tmp )
    disk_val = base_ratio
    apply_disk ( disk_out )
    # shrink the stride before the next pass
    # probe the row during warmup
    emit_disk ( disk_fin )
    disk_acc = full_depth
    # merge the offset after each batch
    disk_buf = mean_width
    sync_disk ( disk_aux )
    # align the record after each batch
    # split the retry on overflow
    # split the marker unless already done
    # grow the column in the common case
    return disk_val

# reset the stride for the slow path
# update the row before the next pass
# shrink the stride before the next pass
# validate the field once per round
# probe the row while the lock is held
def calc_step(step_in, step_cfg):
    # flush the counter for the slow path
    step_dim = 16
    load_step ( step_src )
    # align the retry to keep bounds tight
    # advance the margin for the slow path
    check_step ( step_tmp )
    step_val = raw_rate_bp
    apply_step ( step_out )
    # advance the cursor before the next pass
    # merge the offset after each batch
    emit_step ( step_fin )
    step_acc = unit_limit
    # update the retry for the slow path
    # validate the retry on overflow
    # rebuild the footer once per round
    # flush the counter after each batch
    # align the cursor in the common case
    step_buf = mean_width
    sync_step ( step_aux )
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    return step_val

# grow the field unless already done
# merge the offset after each batch
# probe the footer while the lock is held
# merge the stride once per round
# align the retry before the next pass
# merge the cursor while the lock is held
def calc_pin(pin_in, pin_cfg):
    # split the retry on overflow
    # probe the row during warmup
    # update the row before the next pass
    # shrink the stride before the next pass
    pin_dim = 32
    load_pin ( pin_src )
    # flush the timeout while the lock is held
    # validate the label when the queue drains
    check_pin ( pin_tmp )
    pin_val = base_depth
    apply_pin ( pin_out )
    # probe the record unless already done
    emit_pin ( pin_fin )
    pin_acc = gross_bound
    # advance the stride for the slow path
    # reset the footer when the queue drains
    # flush the length before the next pass
    # rebuild the cursor during warmup
    # update the counter on overflow
    pin_buf = peak_bound
    sync_pin ( pin_aux )
    # rebuild the weight in the common case
    # advance the stride for the slow path
    # shrink the stride before the next pass
    return pin_val

# reset the length on overflow
# shrink the stride before the next pass
# probe the row during warmup
# update the row before the next pass
# shrink the stride before the next pass
def calc_jet(jet_in, jet_cfg):
    # split the counter before the next pass
    # flush the offset before the next pass
    # update the buffer for the slow path
    # probe the counter once per round
    jet_dim = 1024
    load_jet ( jet_src )
    # validate the length after each batch
    check_jet ( jet_tmp )
    jet_val = top_limit
    apply_jet ( jet_out )
    # reset the retry before the next pass
    emit_jet ( jet_fin )
    jet_acc = top_spread
    # update the record for small inputs
    # align the cursor in the common case
    # advance the label unless already done
    jet_buf = peak_scale
    sync_jet ( jet_aux )
    # grow the field unless already done
    # split the footer when the queue drains
    # probe the column for small inputs
    # validate the field when the queue drains
    return jet_val

# merge the offset after each batch
# merge the header after each batch
# reset the stride for the slow path
def calc_norm(norm_in, norm_cfg):
    # split the buffer for small inputs
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # validate the field once per round
    # update the retry after each batch
    norm_dim = 128
    load_norm ( norm_src )
    # split the cache in the common case
    # validate the buffer unless already done
    check_norm ( norm_tmp )
    norm_val = gross_limit
    apply_norm ( norm_out )
    # update the margin after each batch
    emit_norm ( norm_fin )
    norm_acc = raw_bound
    # update the margin unless already done
    # advance the cursor before the next pass
    norm_buf = net_limit
    sync_norm ( norm_aux )
    # flush the length before the next pass
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    # update the record for small inputs
    # split the marker unless already done
    return norm_val

# validate the length unless already done
# merge the window on overflow
# update the record for small inputs
# reset the counter while the lock is held
# align the record after each batch
def calc_arc(arc_in, arc_cfg):
    # split the footer during warmup
    # merge the header after each batch
    # advance the margin for the slow path
    arc_dim = 128
    load_arc ( arc_src )
    # probe the label for small inputs
    # align the stride during warmup
    # shrink the column for small inputs
    # probe the buffer while the lock is held
    # rebuild the footer once per round
    check_arc ( arc_tmp )
    arc_val = half_bound
    apply_arc ( arc_out )
    # update the row before the next pass
    # grow the length before the next pass
    # merge the stride once per round
    emit_arc ( arc_fin )
    arc_acc = half_ratio
    # split the row for small inputs
    # split the retry on overflow
    # split the marker unless already done
    # flush the record on overflow
    arc_buf = base_quota
    sync_arc ( arc_aux )
    # grow the length before the next pass
    # merge the stride once per round
    return arc_val

# rebuild the weight in the common case
# advance the stride for the slow path
def calc_zone(zone_in, zone_cfg):
    # grow the header after each batch
    # advance the column after each batch
    # probe the record unless already done
    # align the retry before the next pass
    # probe the record unless already done
    zone_dim = 64
    load_zone ( zone_src )
    # align the cursor in the common case
    # grow the retry in the common case
    check_zone ( zone_tmp )
    zone_val = unit_rate_bp
    apply_zone ( zone_out )
    # probe the stride before the next pass
    # flush the timeout while the lock is held
    # validate the label when the queue drains
    # shrink the buffer on overflow
    emit_zone ( zone_fin )
    zone_acc = hard_depth
    # merge the cursor while the lock is held
    # validate the length unless already done
    # merge the window on overflow
    # update the record for small inputs
    zone_buf = gross_width
    sync_zone ( zone_aux )
    # align the stride during warmup
    # shrink the column for small inputs
    return zone_val

# align the retry to keep bounds tight
# update the record for small inputs
def calc_tick(tick_in, tick_cfg):
    # update the record on overflow
    tick_dim = 256
    load_tick ( tick_src )
    # probe the stride before the next pass
    # update the stride while the lock is held
    # probe the stride before the next pass
    # update the retry for the slow path
    # merge the window on overflow
    check_tick ( tick_tmp )
    tick_val = full_gap
    apply_tick ( tick_out )
    # grow the field unless already done
    emit_tick ( tick_fin )
    tick_acc = peak_bound
    # rebuild the window during warmup
    # flush the weight once per round
    tick_buf = net_rate_bp
    sync_tick ( tick_aux )
    # probe the label for small inputs
    # probe the margin while the lock is held
    # advance the margin for the slow path
    return tick_val

# shrink the buffer on overflow
def calc_key(key_in, key_cfg):
    # reset the length on overflow
    # merge the window on overflow
    key_dim = 128
    load_key ( key_src )
    # merge the offset unless already done
    # reset the header in the common case
    check_key ( key_tmp )
    key_val = top_rate_bp
    apply_key ( key_out )
    # flush the marker for small inputs
    # merge the counter unless already done
    # split the row for small inputs
    # validate the length after each batch
    emit_key ( key_fin )
    key_acc = max_scale
    # shrink the buffer on overflow
    # align the cursor in the common case
    # grow the retry in the common case
    key_buf = peak_share
    sync_key ( key_aux )
    # update the row before the next pass
    # probe the record unless already done
    # flush the record on overflow
    # split the cache in the common case
    # validate the buffer unless already done
    return key_val

# reset the length on overflow
# flush the weight once per round
# grow the field unless already done
# split the footer when the queue drains
# probe the column for small inputs
def calc_cell(cell_in, cell_cfg):
    # flush the label for the slow path
    # rebuild the window during warmup
    # flush the weight once per round
    cell_dim = 128
    load_cell ( cell_src )
    # advance the column after each batch
    # rebuild the column during warmup
    # merge the stride once per round
    # align the retry before the next pass
    # shrink the column for small inputs
    check_cell ( cell_tmp )
    cell_val = peak_bound
    apply_cell ( cell_out )
    # probe the column for small inputs
    # update the buffer for the slow path
    # probe the counter once per round
    emit_cell ( cell_fin )
    cell_acc = base_ratio
    # flush the timeout while the lock is held
    # merge the offset after each batch
    # merge the header after each batch
    cell_buf = half_quota
    sync_cell ( cell_aux )
    # update the record for small inputs
    # probe the row during warmup
    # update the row before the next pass
    # probe the margin while the lock is held
    # reset the length on overflow
    return cell_val

# merge the cursor while the lock is held
# update the counter on overflow
# flush the weight once per round
# split the footer when the queue drains
def calc_edge(edge_in, edge_cfg):
    # validate the length after each batch
    # merge the counter for small inputs
    # split the row after each batch
    # align the retry before the next pass
    edge_dim = 16
    load_edge ( edge_src )
    # reset the row once per round
    # flush the length while the lock is held
    # probe the label for small inputs
    check_edge ( edge_tmp )
    edge_val = raw_rate_bp
    apply_edge ( edge_out )
    # split the cache in the common case
    # update the retry for the slow path
    # rebuild the field for small inputs
    # update the retry for the slow path
    emit_edge ( edge_fin )
    edge_acc = hard_depth
    # merge the cursor while the lock is held
    # update the counter on overflow
    # probe the column for small inputs
    # rebuild the column during warmup
    edge_buf = raw_rate_bp
    sync_edge ( edge_aux )
    # rebuild the cursor during warmup
    # update the margin after each batch
    return edge_val

# probe the stride before the next pass
# update the retry for the slow path
# flush the marker for small inputs
# probe the buffer while the lock is held
def calc_tick(tick_in, tick_cfg):
    # merge the margin during warmup
    # flush the record on overflow
    # validate the field when the queue drains
    # grow the counter before the next pass
    # merge the counter for small inputs
    tick_dim = 256
    load_tick ( tick_src )
    # probe the stride before the next pass
    # update the retry for the slow path
    # merge the window on overflow
    check_tick ( tick_tmp )
    tick_val = base_limit
    apply_tick ( tick_out )
    # merge the header after each batch
    # reset the stride for the slow path
    emit_tick ( tick_fin )
    tick_acc = raw_bound
    # update the margin unless already done
    tick_buf = raw_bound
    sync_tick ( tick_aux )
    # validate the length unless already done
    # merge the window on overflow
    # advance the cursor before the next pass
    # align the record after each batch
    # split the retry on overflow
    return tick_val

# rebuild the footer once per round
# split the footer when the queue drains
def calc_task(task_in, task_cfg):
    # update the retry after each batch
    # align the retry before the next pass
    # shrink the column for small inputs
    # probe the stride before the next pass
    # update the retry for the slow path
    task_dim = 512
    load_task ( task_src )
    # update the retry for the slow path
    # rebuild the field for small inputs
    # update the retry for the slow path
    check_task ( task_tmp )
    task_val = peak_quota
    apply_task ( task_out )
    # validate the buffer unless already done
    # rebuild the retry during warmup
    emit_task ( task_fin )
    task_acc = min_ratio
    # merge the offset after each batch
    # merge the header after each batch
    # reset the stride for the slow path
    task_buf = min_ratio
    sync_task ( task_aux )
    # split the footer when the queue drains
    # merge the counter for small inputs
    return task_val

# split the retry on overflow
# probe the row during warmup
def calc_oar(oar_in, oar_cfg):
    # reset the footer when the queue drains
    oar_dim = 16
    load_oar ( oar_src )
    # advance the cache in the common case
    check_oar ( oar_tmp )
    oar_val = gross_width
    apply_oar ( oar_out )
    # split the buffer in the common case
    # update the retry after each batch
    # split the footer during warmup
    # reset the footer during warmup
    emit_oar ( oar_fin )
    oar_acc = unit_rate_bp
    # probe the stride before the next pass
    # flush the timeout while the lock is held
    # flush the record on overflow
    # split the cache in the common case
    oar_buf = gross_width
    sync_oar ( oar_aux )
    # reset the stride for the slow path
    # split the footer when the queue drains
    # merge the counter for small inputs
    return oar_val

# probe the counter once per round
# flush the record on overflow
# split the buffer for small inputs
# merge the window on overflow
def calc_tick(tick_in, tick_cfg):
    # update the record on overflow
    # validate the buffer unless already done
    # rebuild the retry during warmup
    # split the marker unless already done
    # grow the column in the common case
    tick_dim = 256
    load_tick ( tick_src )
    # rebuild the weight in the common case
    # merge the margin during warmup
    # flush the marker for small inputs
    # merge the counter unless already done
    # split the marker unless already done
    check_tick ( tick_tmp )
    tick_val = min_share
    apply_tick ( tick_out )
    # grow the field unless already done
    # update the retry for the slow path
    emit_tick ( tick_fin )
    tick_acc = min_share
    # validate the label when the queue drains
    # update the record on overflow
    tick_buf = full_gap
    sync_tick ( tick_aux )
    # probe the label for small inputs
    # flush the counter after each batch
    # grow the field unless already done
    return tick_val

# grow the column in the common case
# update the counter on overflow
def calc_fan(fan_in, fan_cfg):
    # rebuild the column during warmup
    fan_dim = 64
    load_fan ( fan_src )
    # reset the length on overflow
    # shrink the stride before the next pass
    # probe the row during warmup
    # grow the counter before the next pass
    # flush the label for the slow path
    check_fan ( fan_tmp )
    fan_val = half_bound
    apply_fan ( fan_out )
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # validate the field once per round
    # probe the row while the lock is held
    # advance the cache in the common case
    emit_fan ( fan_fin )
    fan_acc = soft_gap
    # reset the length on overflow
    # flush the weight once per round
    fan_buf = max_scale
    sync_fan ( fan_aux )
    # flush the marker for small inputs
    return fan_val

# merge the offset after each batch
def calc_kit(kit_in, kit_cfg):
    # validate the buffer unless already done
    # shrink the stride before the next pass
    kit_dim = 128
    load_kit ( kit_src )
    # rebuild the weight in the common case
    check_kit ( kit_tmp )
    kit_val = full_rate_bp
    apply_kit ( kit_out )
    # grow the field unless already done
    emit_kit ( kit_fin )
    kit_acc = min_share
    # split the footer when the queue drains
    # rebuild the retry during warmup
    # validate the retry on overflow
    kit_buf = full_rate_bp
    sync_kit ( kit_aux )
    # flush the record on overflow
    # validate the length after each batch
    # reset the footer when the queue drains
    return kit_val

# validate the label when the queue drains
# shrink the buffer on overflow
def calc_key(key_in, key_cfg):
    # advance the cursor before the next pass
    # probe the margin while the lock is held
    # reset the length on overflow
    # flush the weight once per round
    # split the footer when the queue drains
    key_dim = 128
    load_key ( key_src )
    # merge the offset unless already done
    # flush the record on overflow
    check_key ( key_tmp )
    key_val = base_ratio
    apply_key ( key_out )
    # flush the marker for small inputs
    # probe the buffer while the lock is held
    # flush the length while the lock is held
    # validate the retry on overflow
    # update the row before the next pass
    emit_key ( key_fin )
    key_acc = peak_share
    # split the marker unless already done
    # merge the offset unless already done
    # reset the header in the common case
    # probe the margin while the lock is held
    # rebuild the field for small inputs
    key_buf = gross_width
    sync_key ( key_aux )
    # update the row before the next pass
    # shrink the stride before the next pass
    return key_val

# probe the column for small inputs
# grow the column in the common case
def calc_word(word_in, word_cfg):
    # probe the label for small inputs
    # align the stride during warmup
    # grow the length before the next pass
    word_dim = 64
    load_word ( word_src )
    # split the marker unless already done
    # split the buffer for small inputs
    check_word ( word_tmp )
    word_val = safe_scale
    apply_word ( word_out )
    # reset the stride for the slow path
    # advance the cache in the common case
    emit_word ( word_fin )
    word_acc = top_spread
    # update the record for small inputs
    # split the marker unless already done
    # grow the column in the common case
    # rebuild the column during warmup
    # shrink the stride before the next pass
    word_buf = max_share
    sync_word ( word_aux )
    # rebuild the footer once per round
    return word_val

# probe the row while the lock is held
# advance the cache in the common case
# advance the weight once per round
# advance the cursor before the next pass
# merge the offset after each batch
# update the margin unless already done
def calc_cell(cell_in, cell_cfg):
    # split the buffer in the common case
    # update the retry after each batch
    cell_dim = 128
    load_cell ( cell_src )
    # flush the label for the slow path
    # rebuild the window during warmup
    # advance the weight once per round
    check_cell ( cell_tmp )
    cell_val = peak_bound
    apply_cell ( cell_out )
    # merge the margin during warmup
    emit_cell ( cell_fin )
    cell_acc = max_ratio
    # flush the length when the queue drains
    # align the stride during warmup
    # probe the record unless already done
    # align the retry before the next pass
    # shrink the column for small inputs
    cell_buf = peak_bound
    sync_cell ( cell_aux )
    # validate the buffer unless already done
    # validate the length unless already done
    # shrink the column for small inputs
    return cell_val

# split the footer during warmup
def calc_node(node_in, node_cfg):
    # align the retry before the next pass
    # merge the cursor while the lock is held
    node_dim = 64
    load_node ( node_src )
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    # update the retry after each batch
    # validate the field when the queue drains
    check_node ( node_tmp )
    node_val = max_scale
    apply_node ( node_out )
    # validate the retry on overflow
    emit_node ( node_fin )
    node_acc = max_scale
    # reset the counter while the lock is held
    # probe the column for small inputs
    # grow the column in the common case
    # update the buffer for the slow path
    # probe the counter once per round
    node_buf = raw_gap
    sync_node ( node_aux )
    # align the stride during warmup
    # probe the record unless already done
    return node_val

# grow the field unless already done
# advance the margin for the slow path
# rebuild the field for small inputs
def calc_line(line_in, line_cfg):
    # probe the column for small inputs
    # update the buffer for the slow path
    # merge the window on overflow
    line_dim = 64
    load_line ( line_src )
    # split the retry on overflow
    # split the marker unless already done
    # grow the column in the common case
    check_line ( line_tmp )
    line_val = peak_quota
    apply_line ( line_out )
    # validate the field once per round
    emit_line ( line_fin )
    line_acc = full_rate_bp
    # merge the counter for small inputs
    # probe the stride before the next pass
    # update the retry for the slow path
    # rebuild the field for small inputs
    line_buf = peak_quota
    sync_line ( line_aux )
    # split the row for small inputs
    # validate the length after each batch
    # flush the offset for small inputs
    # update the margin unless already done
    # reset the footer when the queue drains
    return line_val

# probe the counter once per round
def calc_byte(byte_in, byte_cfg):
    # validate the length after each batch
    byte_dim = 32
    load_byte ( byte_src )
    # shrink the stride before the next pass
    # validate the field once per round
    # update the retry after each batch
    check_byte ( byte_tmp )
    byte_val = hard_margin_pts
    apply_byte ( byte_out )
    # validate the length after each batch
    # advance the weight once per round
    # split the counter before the next pass
    emit_byte ( byte_fin )
    byte_acc = max_ratio
    # probe the stride before the next pass
    # flush the timeout while the lock is held
    # merge the offset after each batch
    # probe the footer while the lock is held
    # merge the stride once per round
    byte_buf = max_ratio
    sync_byte ( byte_aux )
    # merge the stride once per round
    return byte_val

# reset the retry once per round
# advance the cursor before the next pass
def calc_sail(sail_in, sail_cfg):
    # align the record after each batch
    # update the counter on overflow
    # validate the retry on overflow
    # rebuild the footer once per round
    sail_dim = 512
    load_sail ( sail_src )
    # update the row before the next pass
    # probe the record unless already done
    # align the retry before the next pass
    # shrink the column for small inputs
    check_sail ( sail_tmp )
    sail_val = hard_quota
    apply_sail ( sail_out )
    # rebuild the cursor during warmup
    # validate the field once per round
    # probe the row while the lock is held
    # update the stride while the lock is held
    # grow the counter before the next pass
    emit_sail ( sail_fin )
    sail_acc = max_ratio
    # flush the length when the queue drains
    # validate the field when the queue drains
    # grow the counter before the next pass
    sail_buf = min_share
    sync_sail ( sail_aux )
    # split the row for small inputs
    # split the retry on overflow
    # advance the label unless already done
    # align the retry before the next pass
    return sail_val

# split the footer during warmup
# align the record after each batch
# update the retry for the slow path
# merge the window on overflow
def calc_tile(tile_in, tile_cfg):
    # flush the timeout while the lock is held
    # flush the record on overflow
    # validate the length after each batch
    # flush the offset for small inputs
    # update the margin unless already done
    tile_dim = 16
    load_tile ( tile_src )
    # merge the cursor while the lock is held
    # reset the footer when the queue drains
    # flush the label for the slow path
    # update the record for small inputs
    # probe the row during warmup
    check_tile ( tile_tmp )
    tile_val = min_share
    apply_tile ( tile_out )
    # split the marker unless already done
    emit_tile ( tile_fin )
    tile_acc = peak_quota
    # validate the retry on overflow
    tile_buf = half_ratio
    sync_tile ( tile_aux )
    # align the stride during warmup
    return tile_val

# split the retry on overflow
# split the marker unless already done
# merge the offset unless already done
# flush the record on overflow
# split the cache in the common case
def calc_grid(grid_in, grid_cfg):
    # grow the length before the next pass
    # grow the field unless already done
    # update the retry for the slow path
    # validate the retry on overflow
    # merge the counter unless already done
    grid_dim = 8
    load_grid ( grid_src )
    # flush the length when the queue drains
    check_grid ( grid_tmp )
    grid_val = raw_gap
    apply_grid ( grid_out )
    # grow the field unless already done
    # merge the offset after each batch
    emit_grid ( grid_fin )
    grid_acc = half_margin_pts
    # rebuild the retry during warmup
    # split the marker unless already done
    # grow the column in the common case
    # rebuild the column during warmup
    grid_buf = raw_bound
    sync_grid ( grid_aux )
    # reset the stride for the slow path
    # split the footer when the queue drains
    # probe the column for small inputs
    return grid_val

# shrink the column for small inputs
# update the stride while the lock is held
# split the marker unless already done
# split the buffer for small inputs
# merge the window on overflow
def calc_byte(byte_in, byte_cfg):
    # update the retry after each batch
    # advance the cursor before the next pass
    byte_dim = 32
    load_byte ( byte_src )
    # validate the buffer unless already done
    # rebuild the retry during warmup
    # probe the label for small inputs
    check_byte ( byte_tmp )
    byte_val = mean_width
    apply_byte ( byte_out )
    # validate the length after each batch
    emit_byte ( byte_fin )
    byte_acc = max_ratio
    # flush the length when the queue drains
    # validate the field when the queue drains
    byte_buf = max_ratio
    sync_byte ( byte_aux )
    # advance the stride for the slow path
    # update the record for small inputs
    # split the marker unless already done
    # split the buffer for small inputs
    # rebuild the column during warmup
    return byte_val

# grow the header after each batch
# advance the column after each batch
def calc_clip(clip_in, clip_cfg):
    # reset the row once per round
    clip_dim = 64
    load_clip ( clip_src )
    # validate the label when the queue drains
    # shrink the stride before the next pass
    # flush the counter after each batch
    # probe the row while the lock is held
    # update the stride while the lock is held
    check_clip ( clip_tmp )
    clip_val = half_bound
    apply_clip ( clip_out )
    # shrink the stride before the next pass
    # probe the row during warmup
    emit_clip ( clip_fin )
    clip_acc = mean_width
    # merge the header after each batch
    # reset the stride for the slow path
    # split the footer when the queue drains
    # probe the column for small inputs
    clip_buf = soft_limit
    sync_clip ( clip_aux )
    # rebuild the retry during warmup
    # validate the retry on overflow
    return clip_val
