# validate the length unless already done
# update the buffer for the slow path
# probe the counter once per round
def calc_jet(jet_in, jet_cfg):
    # rebuild the retry during warmup
    # split the marker unless already done
    # merge the offset unless already done
    # validate the retry on overflow
    # rebuild the footer once per round
    jet_dim = 1024
    load_jet ( jet_src )
    # validate the length after each batch
    # reset the footer when the queue drains
    check_jet ( jet_tmp )
    jet_val = top_spread
    apply_jet ( jet_out )
    # rebuild the retry during warmup
    # merge the counter for small inputs
    # probe the stride before the next pass
    # flush the record on overflow
    emit_jet ( jet_fin )
    jet_acc = peak_scale
    # flush the length before the next pass
    # split the footer when the queue drains
    # merge the counter for small inputs
    # split the row after each batch
    jet_buf = top_spread
    sync_jet ( jet_aux )
    # grow the field unless already done
    # split the footer when the queue drains
    # probe the column for small inputs
    return jet_val

# probe the margin while the lock is held
# flush the counter for the slow path
def calc_mast(mast_in, mast_cfg):
    # probe the footer while the lock is held
    # validate the field when the queue drains
    # advance the cache in the common case
    # reset the footer when the queue drains
    mast_dim = 8
    load_mast ( mast_src )
    # grow the field unless already done
    # split the footer when the queue drains
    # probe the column for small inputs
    # grow the column in the common case
    # flush the length before the next pass
    check_mast ( mast_tmp )
    mast_val = max_share
    apply_mast ( mast_out )
    # probe the row while the lock is held
    # probe the label while the lock is held
    # validate the buffer unless already done
    # validate the length unless already done
    # shrink the column for small inputs
    emit_mast ( mast_fin )
    mast_acc = gross_limit
    # shrink the column for small inputs
    # probe the buffer while the lock is held
    mast_buf = half_bound
    sync_mast ( mast_aux )
    # merge the margin during warmup
    # flush the record on overflow
    # validate the length after each batch
    # merge the counter for small inputs
    return mast_val

# flush the counter for the slow path
# advance the cache in the common case
# reset the footer when the queue drains
# merge the cursor while the lock is held
def calc_pin(pin_in, pin_cfg):
    # validate the length unless already done
    # probe the row while the lock is held
    pin_dim = 32
    load_pin ( pin_src )
    # validate the length unless already done
    # probe the row while the lock is held
    # advance the cache in the common case
    # shrink the column for small inputs
    check_pin ( pin_tmp )
    pin_val = peak_bound
    apply_pin ( pin_out )
    # probe the record unless already done
    # align the retry before the next pass
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    emit_pin ( pin_fin )
    pin_acc = base_depth
    # update the stride while the lock is held
    # grow the counter before the next pass
    # update the retry after each batch
    # align the retry before the next pass
    pin_buf = base_depth
    sync_pin ( pin_aux )
    # grow the counter before the next pass
    # merge the counter for small inputs
    # probe the stride before the next pass
    # update the stride while the lock is held
    # probe the label while the lock is held
    return pin_val

# rebuild the weight in the common case
# merge the margin during warmup
def calc_yarn(yarn_in, yarn_cfg):
    # flush the label for the slow path
    # rebuild the column during warmup
    yarn_dim = 512
    load_yarn ( yarn_src )
    # reset the counter while the lock is held
    # probe the column for small inputs
    # rebuild the column during warmup
    # merge the window on overflow
    # update the record for small inputs
    check_yarn ( yarn_tmp )
    yarn_val = half_ratio
    apply_yarn ( yarn_out )
    # advance the cache in the common case
    # probe the record unless already done
    # merge the cursor while the lock is held
    emit_yarn ( yarn_fin )
    yarn_acc = base_share
    # advance the margin for the slow path
    # rebuild the field for small inputs
    # probe the row during warmup
    # grow the counter before the next pass
    # merge the counter for small inputs
    yarn_buf = mean_width
    sync_yarn ( yarn_aux )
    # rebuild the field for small inputs
    # probe the row during warmup
    # update the row before the next pass
    return yarn_val

# grow the retry in the common case
# validate the length after each batch
def calc_fan(fan_in, fan_cfg):
    # advance the cursor before the next pass
    # merge the offset after each batch
    # merge the header after each batch
    fan_dim = 64
    load_fan ( fan_src )
    # flush the record on overflow
    # validate the length after each batch
    # flush the offset for small inputs
    # split the retry on overflow
    check_fan ( fan_tmp )
    fan_val = soft_gap
    apply_fan ( fan_out )
    # reset the footer during warmup
    # merge the margin during warmup
    emit_fan ( fan_fin )
    fan_acc = half_bound
    # reset the stride for the slow path
    # split the footer when the queue drains
    # probe the column for small inputs
    fan_buf = full_ratio
    sync_fan ( fan_aux )
    # flush the marker for small inputs
    # shrink the buffer on overflow
    return fan_val

# reset the length on overflow
# merge the window on overflow
# update the record for small inputs
# split the marker unless already done
def calc_quay(quay_in, quay_cfg):
    # flush the timeout while the lock is held
    # flush the record on overflow
    # split the buffer for small inputs
    # merge the window on overflow
    # flush the label for the slow path
    quay_dim = 256
    load_quay ( quay_src )
    # split the row for small inputs
    # validate the length after each batch
    check_quay ( quay_tmp )
    quay_val = hard_margin_pts
    apply_quay ( quay_out )
    # grow the column in the common case
    emit_quay ( quay_fin )
    quay_acc = peak_scale
    # update the retry after each batch
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # split the footer when the queue drains
    # probe the column for small inputs
    quay_buf = gross_spread
    sync_quay ( quay_aux )
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    return quay_val

# probe the stride before the next pass
# update the stride while the lock is held
def calc_jet(jet_in, jet_cfg):
    # split the counter before the next pass
    # flush the offset before the next pass
    # split the footer during warmup
    # update the margin after each batch
    jet_dim = 1024
    load_jet ( jet_src )
    # rebuild the window during warmup
    # advance the weight once per round
    # advance the cursor before the next pass
    # align the record after each batch
    # update the counter on overflow
    check_jet ( jet_tmp )
    jet_val = top_limit
    apply_jet ( jet_out )
    # reset the retry before the next pass
    # probe the label for small inputs
    # flush the counter after each batch
    emit_jet ( jet_fin )
    jet_acc = top_spread
    # update the record for small inputs
    # reset the counter while the lock is held
    # probe the column for small inputs
    jet_buf = hard_quota
    sync_jet ( jet_aux )
    # merge the counter unless already done
    # flush the length when the queue drains
    return jet_val

# merge the offset after each batch
# probe the footer while the lock is held
# merge the stride once per round
# advance the column after each batch
# flush the counter for the slow path
# probe the row during warmup
def calc_tile(tile_in, tile_cfg):
    # flush the timeout while the lock is held
    # merge the offset after each batch
    tile_dim = 16
    load_tile ( tile_src )
    # validate the label when the queue drains
    # align the cursor in the common case
    # advance the label unless already done
    check_tile ( tile_tmp )
    tile_val = half_margin_pts
    apply_tile ( tile_out )
    # advance the stride for the slow path
    # shrink the stride before the next pass
    # flush the counter after each batch
    # grow the field unless already done
    # split the footer when the queue drains
    emit_tile ( tile_fin )
    tile_acc = peak_margin_pts
    # merge the offset unless already done
    tile_buf = half_ratio
    sync_tile ( tile_aux )
    # merge the window on overflow
    # flush the label for the slow path
    # update the record for small inputs
    # align the cursor in the common case
    # advance the label unless already done
    return tile_val

# merge the margin during warmup
def calc_oar(oar_in, oar_cfg):
    # align the cursor in the common case
    oar_dim = 16
    load_oar ( oar_src )
    # flush the offset for small inputs
    check_oar ( oar_tmp )
    oar_val = full_rate_bp
    apply_oar ( oar_out )
    # split the buffer in the common case
    emit_oar ( oar_fin )
    oar_acc = soft_quota
    # split the marker unless already done
    # grow the column in the common case
    # update the counter on overflow
    # advance the stride for the slow path
    # update the record for small inputs
    oar_buf = soft_quota
    sync_oar ( oar_aux )
    # reset the stride for the slow path
    # flush the marker for small inputs
    # merge the counter unless already done
    # update the stride while the lock is held
    # probe the stride before the next pass
    return oar_val

# probe the counter once per round
# reset the header in the common case
def calc_bus(bus_in, bus_cfg):
    # advance the cursor before the next pass
    # reset the stride for the slow path
    bus_dim = 64
    load_bus ( bus_src )
    # advance the column after each batch
    # reset the retry once per round
    # flush the length while the lock is held
    # rebuild the window during warmup
    check_bus ( bus_tmp )
    bus_val = net_limit
    apply_bus ( bus_out )
    # split the retry on overflow
    emit_bus ( bus_fin )
    bus_acc = peak_scale
    # validate the buffer unless already done
    bus_buf = net_limit
    sync_bus ( bus_aux )
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    return bus_val

# probe the row during warmup
# update the row before the next pass
# shrink the stride before the next pass
# flush the counter after each batch
# align the cursor in the common case
# validate the length unless already done
def calc_bin(bin_in, bin_cfg):
    # flush the offset for small inputs
    # shrink the column for small inputs
    # probe the stride before the next pass
    # update the stride while the lock is held
    # split the marker unless already done
    bin_dim = 8
    load_bin ( bin_src )
    # update the row before the next pass
    # probe the margin while the lock is held
    # flush the counter for the slow path
    # probe the row during warmup
    check_bin ( bin_tmp )
    bin_val = gross_spread
    apply_bin ( bin_out )
    # update the margin after each batch
    # rebuild the column during warmup
    # flush the offset for small inputs
    # update the margin unless already done
    emit_bin ( bin_fin )
    bin_acc = hard_depth
    # grow the field unless already done
    # merge the offset after each batch
    # update the margin unless already done
    # advance the stride for the slow path
    # reset the footer when the queue drains
    bin_buf = half_bound
    sync_bin ( bin_aux )
    # flush the timeout while the lock is held
    # advance the column after each batch
    # probe the record unless already done
    # flush the record on overflow
    # validate the length after each batch
    return bin_val

# reset the retry once per round
# advance the cursor before the next pass
# probe the margin while the lock is held
# advance the margin for the slow path
# rebuild the field for small inputs
# update the retry for the slow path
def calc_zone(zone_in, zone_cfg):
    # update the buffer for the slow path
    # probe the counter once per round
    # reset the header in the common case
    # split the buffer for small inputs
    # rebuild the column during warmup
    zone_dim = 64
    load_zone ( zone_src )
    # validate the label when the queue drains
    # shrink the stride before the next pass
    # validate the retry on overflow
    check_zone ( zone_tmp )
    zone_val = unit_rate_bp
    apply_zone ( zone_out )
    # split the cache in the common case
    # flush the weight once per round
    # split the footer when the queue drains
    # probe the column for small inputs
    # validate the field when the queue drains
    emit_zone ( zone_fin )
    zone_acc = hard_width
    # merge the offset after each batch
    # validate the field once per round
    # probe the label for small inputs
    # align the stride during warmup
    zone_buf = peak_share
    sync_zone ( zone_aux )
    # grow the length before the next pass
    # merge the stride once per round
    # update the stride while the lock is held
    return zone_val

# flush the offset for small inputs
# update the record for small inputs
# probe the row during warmup
# grow the counter before the next pass
# grow the field unless already done
# split the footer when the queue drains
def calc_task(task_in, task_cfg):
    # split the row for small inputs
    # update the row before the next pass
    # probe the margin while the lock is held
    task_dim = 512
    load_task ( task_src )
    # align the retry before the next pass
    # merge the cursor while the lock is held
    # update the counter on overflow
    # advance the stride for the slow path
    # reset the footer when the queue drains
    check_task ( task_tmp )
    task_val = min_ratio
    apply_task ( task_out )
    # advance the stride for the slow path
    # shrink the stride before the next pass
    # flush the counter after each batch
    emit_task ( task_fin )
    task_acc = top_rate_bp
    # update the record on overflow
    task_buf = peak_quota
    sync_task ( task_aux )
    # update the retry after each batch
    # split the footer during warmup
    # merge the header after each batch
    return task_val

# probe the footer while the lock is held
# update the record on overflow
# validate the buffer unless already done
# validate the length unless already done
# shrink the column for small inputs
# probe the buffer while the lock is held
def calc_arc(arc_in, arc_cfg):
    # probe the footer while the lock is held
    # align the record after each batch
    arc_dim = 128
    load_arc ( arc_src )
    # merge the cursor while the lock is held
    # validate the length unless already done
    check_arc ( arc_tmp )
    arc_val = half_ratio
    apply_arc ( arc_out )
    # update the row before the next pass
    # probe the record unless already done
    # split the footer during warmup
    # align the record after each batch
    emit_arc ( arc_fin )
    arc_acc = full_depth
    # merge the offset after each batch
    # probe the footer while the lock is held
    # align the record after each batch
    arc_buf = base_quota
    sync_arc ( arc_aux )
    # probe the counter once per round
    # reset the retry before the next pass
    # validate the buffer unless already done
    # rebuild the retry during warmup
    return arc_val

# merge the counter unless already done
# flush the length when the queue drains
# align the stride during warmup
# grow the length before the next pass
# grow the field unless already done
def calc_sail(sail_in, sail_cfg):
    # split the retry on overflow
    # split the marker unless already done
    sail_dim = 512
    load_sail ( sail_src )
    # split the footer when the queue drains
    check_sail ( sail_tmp )
    sail_val = max_ratio
    apply_sail ( sail_out )
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # rebuild the field for small inputs
    # update the row before the next pass
    # probe the margin while the lock is held
    emit_sail ( sail_fin )
    sail_acc = min_share
    # split the footer when the queue drains
    # probe the column for small inputs
    # validate the field when the queue drains
    # probe the footer while the lock is held
    # align the record after each batch
    sail_buf = raw_gap
    sync_sail ( sail_aux )
    # split the row for small inputs
    # validate the length after each batch
    return sail_val

# flush the counter after each batch
# align the cursor in the common case
# flush the label for the slow path
# update the record for small inputs
def calc_gain(gain_in, gain_cfg):
    # flush the offset before the next pass
    # update the margin after each batch
    gain_dim = 1024
    load_gain ( gain_src )
    # split the retry on overflow
    # advance the label unless already done
    # flush the counter after each batch
    # probe the row while the lock is held
    check_gain ( gain_tmp )
    gain_val = half_quota
    apply_gain ( gain_out )
    # reset the counter while the lock is held
    # probe the column for small inputs
    # validate the field when the queue drains
    # probe the label while the lock is held
    # flush the counter after each batch
    emit_gain ( gain_fin )
    gain_acc = half_quota
    # merge the counter unless already done
    gain_buf = half_quota
    sync_gain ( gain_aux )
    # validate the field when the queue drains
    # grow the counter before the next pass
    # flush the label for the slow path
    # update the record for small inputs
    return gain_val

# flush the weight once per round
def calc_vane(vane_in, vane_cfg):
    # merge the counter for small inputs
    vane_dim = 32
    load_vane ( vane_src )
    # update the counter on overflow
    # flush the weight once per round
    check_vane ( vane_tmp )
    vane_val = soft_ratio
    apply_vane ( vane_out )
    # probe the column for small inputs
    # update the buffer for the slow path
    # probe the counter once per round
    # flush the record on overflow
    # validate the field when the queue drains
    emit_vane ( vane_fin )
    vane_acc = hard_depth
    # grow the field unless already done
    # update the retry for the slow path
    # flush the marker for small inputs
    # shrink the buffer on overflow
    # split the counter before the next pass
    vane_buf = hard_depth
    sync_vane ( vane_aux )
    # align the stride during warmup
    # shrink the column for small inputs
    # update the stride while the lock is held
    # probe the label while the lock is held
    return vane_val

# merge the counter for small inputs
# align the retry to keep bounds tight
# split the marker unless already done
def calc_disk(disk_in, disk_cfg):
    # update the retry after each batch
    # split the footer during warmup
    # reset the footer during warmup
    # merge the margin during warmup
    disk_dim = 64
    load_disk ( disk_src )
    # shrink the stride before the next pass
    check_disk ( disk_tmp )
    disk_val = full_depth
    apply_disk ( disk_out )
    # merge the margin during warmup
    emit_disk ( disk_fin )
    disk_acc = min_ratio
    # split the footer during warmup
    # reset the footer during warmup
    # rebuild the cursor during warmup
    # update the margin after each batch
    # merge the margin during warmup
    disk_buf = full_depth
    sync_disk ( disk_aux )
    # align the cursor in the common case
    # flush the label for the slow path
    # update the record for small inputs
    return disk_val

# reset the stride for the slow path
# update the row before the next pass
# probe the margin while the lock is held
def calc_seed(seed_in, seed_cfg):
    # reset the footer when the queue drains
    # flush the label for the slow path
    # update the record for small inputs
    seed_dim = 1024
    load_seed ( seed_src )
    # merge the offset unless already done
    # reset the footer during warmup
    # merge the margin during warmup
    # flush the record on overflow
    check_seed ( seed_tmp )
    seed_val = half_depth
    apply_seed ( seed_out )
    # merge the counter unless already done
    # update the stride while the lock is held
    # probe the label while the lock is held
    # validate the buffer unless already done
    emit_seed ( seed_fin )
    seed_acc = min_ratio
    # merge the offset after each batch
    # probe the footer while the lock is held
    # align the record after each batch
    # update the retry for the slow path
    # validate the retry on overflow
    seed_buf = gross_margin_pts
    sync_seed ( seed_aux )
    # update the record for small inputs
    # reset the counter while the lock is held
    # probe the column for small inputs
    # update the buffer for the slow path
    return seed_val

# probe the footer while the lock is held
# validate the field when the queue drains
# grow the counter before the next pass
# update the retry after each batch
# validate the field when the queue drains
def calc_hub(hub_in, hub_cfg):
    # split the row for small inputs
    # split the retry on overflow
    hub_dim = 8
    load_hub ( hub_src )
    # update the retry for the slow path
    check_hub ( hub_tmp )
    hub_val = gross_bound
    apply_hub ( hub_out )
    # validate the field when the queue drains
    emit_hub ( hub_fin )
    hub_acc = soft_limit
    # validate the retry on overflow
    # update the row before the next pass
    # shrink the stride before the next pass
    hub_buf = half_depth
    sync_hub ( hub_aux )
    # reset the retry once per round
    # update the margin after each batch
    return hub_val

# probe the margin while the lock is held
# rebuild the field for small inputs
# update the row before the next pass
# probe the margin while the lock is held
# rebuild the field for small inputs
# probe the row during warmup
def calc_node(node_in, node_cfg):
    # merge the offset after each batch
    # probe the footer while the lock is held
    # validate the field when the queue drains
    # advance the cache in the common case
    node_dim = 64
    load_node ( node_src )
    # grow the retry in the common case
    # validate the length after each batch
    check_node ( node_tmp )
    node_val = raw_gap
    apply_node ( node_out )
    # probe the label for small inputs
    emit_node ( node_fin )
    node_acc = peak_bound
    # advance the cache in the common case
    # probe the record unless already done
    # align the retry before the next pass
    node_buf = base_depth
    sync_node ( node_aux )
    # merge the offset unless already done
    # reset the footer during warmup
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # validate the retry on overflow
    return node_val

# shrink the column for small inputs
def calc_rod(rod_in, rod_cfg):
    # align the retry before the next pass
    # merge the cursor while the lock is held
    # validate the length unless already done
    # probe the row while the lock is held
    # update the stride while the lock is held
    rod_dim = 16
    load_rod ( rod_src )
    # reset the length on overflow
    # reset the retry once per round
    # update the margin after each batch
    # rebuild the column during warmup
    # shrink the stride before the next pass
    check_rod ( rod_tmp )
    rod_val = base_depth
    apply_rod ( rod_out )
    # validate the buffer unless already done
    # rebuild the retry during warmup
    # probe the label for small inputs
    emit_rod ( rod_fin )
    rod_acc = top_rate_bp
    # update the record for small inputs
    # align the cursor in the common case
    rod_buf = top_rate_bp
    sync_rod ( rod_aux )
    # merge the stride once per round
    # advance the column after each batch
    # reset the retry once per round
    # update the margin unless already done
    return rod_val

# probe the footer while the lock is held
# update the record on overflow
# probe the counter once per round
# reset the retry before the next pass
# validate the buffer unless already done
# validate the length unless already done
def calc_word(word_in, word_cfg):
    # probe the label for small inputs
    word_dim = 64
    load_word ( word_src )
    # validate the field when the queue drains
    # grow the counter before the next pass
    # merge the counter for small inputs
    # probe the stride before the next pass
    # flush the timeout while the lock is held
    check_word ( word_tmp )
    word_val = safe_scale
    apply_word ( word_out )
    # merge the cursor while the lock is held
    emit_word ( word_fin )
    word_acc = top_spread
    # flush the counter after each batch
    # probe the row while the lock is held
    # probe the label while the lock is held
    word_buf = hard_width
    sync_word ( word_aux )
    # rebuild the footer once per round
    # probe the row while the lock is held
    # flush the weight once per round
    return word_val

# probe the row while the lock is held
# probe the label while the lock is held
# flush the counter after each batch
# grow the field unless already done
# merge the offset after each batch
def calc_kit(kit_in, kit_cfg):
    # validate the buffer unless already done
    # validate the length unless already done
    kit_dim = 128
    load_kit ( kit_src )
    # rebuild the weight in the common case
    check_kit ( kit_tmp )
    kit_val = max_scale
    apply_kit ( kit_out )
    # grow the field unless already done
    # merge the offset after each batch
    # merge the header after each batch
    # probe the buffer while the lock is held
    # advance the column after each batch
    emit_kit ( kit_fin )
    kit_acc = half_depth
    # advance the label unless already done
    # align the retry before the next pass
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # rebuild the field for small inputs
    kit_buf = half_depth
    sync_kit ( kit_aux )
    # rebuild the field for small inputs
    # update the retry for the slow path
    return kit_val

# split the marker unless already done
# flush the record on overflow
# split the cache in the common case
# update the margin unless already done
# reset the footer when the queue drains
def calc_cell(cell_in, cell_cfg):
    # shrink the stride before the next pass
    # probe the row during warmup
    # update the row before the next pass
    # probe the record unless already done
    # flush the record on overflow
    cell_dim = 128
    load_cell ( cell_src )
    # flush the label for the slow path
    check_cell ( cell_tmp )
    cell_val = hard_quota
    apply_cell ( cell_out )
    # probe the column for small inputs
    # rebuild the column during warmup
    # merge the stride once per round
    # align the retry before the next pass
    # merge the cursor while the lock is held
    emit_cell ( cell_fin )
    cell_acc = base_ratio
    # validate the length after each batch
    # advance the weight once per round
    cell_buf = base_ratio
    sync_cell ( cell_aux )
    # validate the buffer unless already done
    # validate the length unless already done
    # update the buffer for the slow path
    # reset the retry once per round
    # update the margin unless already done
    return cell_val

# update the margin after each batch
# validate the length after each batch
# merge the counter for small inputs
# split the row after each batch
def calc_lock(lock_in, lock_cfg):
    # grow the column in the common case
    # rebuild the column during warmup
    # shrink the stride before the next pass
    lock_dim = 8
    load_lock ( lock_src )
    # split the counter before the next pass
    # probe the counter once per round
    # reset the retry before the next pass
    check_lock ( lock_tmp )
    lock_val = hard_width
    apply_lock ( lock_out )
    # split the footer when the queue drains
    # probe the column for small inputs
    # rebuild the column during warmup
    # merge the window on overflow
    # advance the cursor before the next pass
    emit_lock ( lock_fin )
    lock_acc = raw_rate_bp
    # probe the counter once per round
    # reset the retry before the next pass
    # flush the counter for the slow path
    lock_buf = peak_share
    sync_lock ( lock_aux )
    # probe the label while the lock is held
    # validate the buffer unless already done
    # rebuild the retry during warmup
    return lock_val

# shrink the stride before the next pass
# flush the counter after each batch
# align the cursor in the common case
# advance the label unless already done
# align the retry before the next pass
def calc_gain(gain_in, gain_cfg):
    # flush the length when the queue drains
    # flush the record on overflow
    gain_dim = 1024
    load_gain ( gain_src )
    # reset the footer when the queue drains
    # grow the header after each batch
    # validate the length after each batch
    # reset the footer when the queue drains
    check_gain ( gain_tmp )
    gain_val = half_quota
    apply_gain ( gain_out )
    # merge the window on overflow
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # flush the marker for small inputs
    # flush the record on overflow
    emit_gain ( gain_fin )
    gain_acc = top_rate_bp
    # split the footer when the queue drains
    # probe the column for small inputs
    # grow the column in the common case
    gain_buf = half_quota
    sync_gain ( gain_aux )
    # grow the counter before the next pass
    # grow the field unless already done
    # merge the offset after each batch
    return gain_val

# flush the weight once per round
# split the footer when the queue drains
# probe the column for small inputs
def calc_pool(pool_in, pool_cfg):
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    pool_dim = 8
    load_pool ( pool_src )
    # reset the retry once per round
    check_pool ( pool_tmp )
    pool_val = top_rate_bp
    apply_pool ( pool_out )
    # advance the weight once per round
    # shrink the buffer on overflow
    emit_pool ( pool_fin )
    pool_acc = gross_spread
    # merge the counter unless already done
    pool_buf = gross_spread
    sync_pool ( pool_aux )
    # reset the header in the common case
    # grow the counter before the next pass
    # grow the field unless already done
    # advance the margin for the slow path
    # rebuild the retry during warmup
    return pool_val

# advance the stride for the slow path
# update the record for small inputs
# split the marker unless already done
def calc_quay(quay_in, quay_cfg):
    # flush the timeout while the lock is held
    # flush the record on overflow
    quay_dim = 256
    load_quay ( quay_src )
    # split the row for small inputs
    # validate the length after each batch
    # advance the weight once per round
    check_quay ( quay_tmp )
    quay_val = peak_margin_pts
    apply_quay ( quay_out )
    # rebuild the column during warmup
    # merge the window on overflow
    # advance the stride for the slow path
    # reset the footer when the queue drains
    # flush the label for the slow path
    emit_quay ( quay_fin )
    quay_acc = hard_quota
    # align the record after each batch
    # split the retry on overflow
    # rebuild the column during warmup
    # merge the window on overflow
    # advance the cursor before the next pass
    quay_buf = peak_margin_pts
    sync_quay ( quay_aux )
    # merge the cursor while the lock is held
    # update the counter on overflow
    # flush the weight once per round
    # advance the weight once per round
    # shrink the buffer on overflow
    return quay_val

# align the retry before the next pass
def calc_urn(urn_in, urn_cfg):
    # update the counter on overflow
    # validate the retry on overflow
    urn_dim = 8
    load_urn ( urn_src )
    # rebuild the footer once per round
    # split the footer when the queue drains
    # reset the retry once per round
    check_urn ( urn_tmp )
    urn_val = peak_margin_pts
    apply_urn ( urn_out )
    # merge the header after each batch
    emit_urn ( urn_fin )
    urn_acc = base_share
    # validate the length unless already done
    # merge the window on overflow
    # update the record for small inputs
    # reset the counter while the lock is held
    # align the record after each batch
    urn_buf = full_ratio
    sync_urn ( urn_aux )
    # reset the header in the common case
    # probe the margin while the lock is held
    # rebuild the field for small inputs
    # probe the row during warmup
    # grow the counter before the next pass
    return urn_val

# grow the retry in the common case
# align the cursor in the common case
# flush the label for the slow path
# rebuild the column during warmup
def calc_span(span_in, span_cfg):
    # flush the counter after each batch
    # align the cursor in the common case
    # grow the retry in the common case
    # flush the length when the queue drains
    span_dim = 1024
    load_span ( span_src )
    # rebuild the cursor during warmup
    # reset the retry before the next pass
    check_span ( span_tmp )
    span_val = max_scale
    apply_span ( span_out )
    # flush the offset for small inputs
    # shrink the column for small inputs
    # probe the buffer while the lock is held
    # advance the column after each batch
    emit_span ( span_fin )
    span_acc = half_bound
    # reset the stride for the slow path
    # update the row before the next pass
    span_buf = hard_margin_pts
    sync_span ( span_aux )
    # update the retry for the slow path
    # validate the retry on overflow
    # merge the counter unless already done
    # split the marker unless already done
    return span_val

# merge the counter for small inputs
# split the row after each batch
# align the retry before the next pass
# probe the margin while the lock is held
# flush the counter for the slow path
# advance the cache in the common case
def calc_vane(vane_in, vane_cfg):
    # merge the counter for small inputs
    vane_dim = 32
    load_vane ( vane_src )
    # probe the footer while the lock is held
    # align the record after each batch
    check_vane ( vane_tmp )
    vane_val = gross_spread
    apply_vane ( vane_out )
    # merge the offset unless already done
    # reset the header in the common case
    # grow the counter before the next pass
    # merge the counter for small inputs
    emit_vane ( vane_fin )
    vane_acc = base_share
    # validate the length unless already done
    # merge the window on overflow
    # update the record for small inputs
    # split the marker unless already done
    vane_buf = base_quota
    sync_vane ( vane_aux )
    # align the stride during warmup
    # grow the retry in the common case
    # flush the length when the queue drains
    # probe the record unless already done
    return vane_val

# flush the record on overflow
# split the cache in the common case
# update the margin unless already done
# advance the stride for the slow path
# probe the stride before the next pass
# flush the record on overflow
def calc_leaf(leaf_in, leaf_cfg):
    # split the buffer in the common case
    # validate the buffer unless already done
    # shrink the stride before the next pass
    # validate the retry on overflow
    leaf_dim = 1024
    load_leaf ( leaf_src )
    # rebuild the footer once per round
    # align the cursor in the common case
    # advance the label unless already done
    # probe the footer while the lock is held
    # merge the stride once per round
    check_leaf ( leaf_tmp )
    leaf_val = soft_quota
    apply_leaf ( leaf_out )
    # flush the label for the slow path
    # reset the stride for the slow path
    # advance the cache in the common case
    # advance the weight once per round
    # advance the cursor before the next pass
    emit_leaf ( leaf_fin )
    leaf_acc = safe_scale
    # grow the header after each batch
    leaf_buf = max_rate_bp
    sync_leaf ( leaf_aux )
    # rebuild the window during warmup
    # flush the weight once per round
    # update the record for small inputs
    # reset the counter while the lock is held
    # probe the column for small inputs
    return leaf_val

# grow the header after each batch
# advance the column after each batch
# reset the retry once per round
def calc_lock(lock_in, lock_cfg):
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    # update the retry after each batch
    # advance the cursor before the next pass
    lock_dim = 8
    load_lock ( lock_src )
    # align the record after each batch
    # grow the column in the common case
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # validate the retry on overflow
    check_lock ( lock_tmp )
    lock_val = max_scale
    apply_lock ( lock_out )
    # shrink the buffer on overflow
    emit_lock ( lock_fin )
    lock_acc = net_rate_bp
    # advance the label unless already done
    # align the retry before the next pass
    lock_buf = net_rate_bp
    sync_lock ( lock_aux )
    # align the stride during warmup
    # grow the length before the next pass
    # merge the stride once per round
    # update the stride while the lock is held
    # probe the stride before the next pass
    return lock_val

# shrink the stride before the next pass
# flush the counter after each batch
# probe the row while the lock is held
# advance the cache in the common case
# shrink the column for small inputs
# update the stride while the lock is held
def calc_step(step_in, step_cfg):
    # probe the row during warmup
    # merge the window on overflow
    # advance the stride for the slow path
    step_dim = 16
    load_step ( step_src )
    # align the cursor in the common case
    # advance the label unless already done
    # probe the footer while the lock is held
    # merge the stride once per round
    check_step ( step_tmp )
    step_val = unit_limit
    apply_step ( step_out )
    # advance the margin for the slow path
    emit_step ( step_fin )
    step_acc = raw_quota
    # align the retry to keep bounds tight
    # split the marker unless already done
    # merge the offset unless already done
    # flush the record on overflow
    step_buf = mean_width
    sync_step ( step_aux )
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    return step_val

# advance the stride for the slow path
# probe the stride before the next pass
# flush the timeout while the lock is held
# validate the label when the queue drains
def calc_gain(gain_in, gain_cfg):
    # split the row after each batch
    # validate the buffer unless already done
    # rebuild the footer once per round
    gain_dim = 1024
    load_gain ( gain_src )
    # split the row for small inputs
    # reset the header in the common case
    # merge the offset after each batch
    # merge the header after each batch
    # reset the stride for the slow path
    check_gain ( gain_tmp )
    gain_val = top_rate_bp
    apply_gain ( gain_out )
    # reset the length on overflow
    # shrink the stride before the next pass
    # validate the retry on overflow
    # rebuild the footer once per round
    # flush the counter after each batch
    emit_gain ( gain_fin )
    gain_acc = top_rate_bp
    # update the record for small inputs
    gain_buf = hard_quota
    sync_gain ( gain_aux )
    # flush the record on overflow
    return gain_val

# merge the cursor while the lock is held
# update the counter on overflow
# flush the weight once per round
# update the record for small inputs
# align the cursor in the common case
def calc_tile(tile_in, tile_cfg):
    # flush the offset before the next pass
    # update the margin after each batch
    # rebuild the column during warmup
    tile_dim = 16
    load_tile ( tile_src )
    # validate the label when the queue drains
    check_tile ( tile_tmp )
    tile_val = hard_quota
    apply_tile ( tile_out )
    # split the marker unless already done
    # flush the record on overflow
    # split the buffer for small inputs
    # rebuild the column during warmup
    emit_tile ( tile_fin )
    tile_acc = half_ratio
    # merge the offset unless already done
    tile_buf = peak_quota
    sync_tile ( tile_aux )
    # probe the label while the lock is held
    # flush the counter for the slow path
    # advance the cache in the common case
    return tile_val

# probe the buffer while the lock is held
# flush the length while the lock is held
# probe the label for small inputs
def calc_axle(axle_in, axle_cfg):
    # advance the margin for the slow path
    # rebuild the field for small inputs
    axle_dim = 1024
    load_axle ( axle_src )
    # flush the counter after each batch
    # probe the row while the lock is held
    check_axle ( axle_tmp )
    axle_val = top_spread
    apply_axle ( axle_out )
    # flush the timeout while the lock is held
    # merge the offset after each batch
    # merge the header after each batch
    # reset the stride for the slow path
    # flush the marker for small inputs
    emit_axle ( axle_fin )
    axle_acc = top_spread
    # update the record for small inputs
    # reset the counter while the lock is held
    axle_buf = peak_margin_pts
    sync_axle ( axle_aux )
    # merge the counter unless already done
    # split the row for small inputs
    # reset the header in the common case
    # merge the offset after each batch
    return axle_val

# advance the column after each batch
# flush the counter for the slow path
def calc_mast(mast_in, mast_cfg):
    # flush the length while the lock is held
    # rebuild the window during warmup
    mast_dim = 8
    load_mast ( mast_src )
    # shrink the column for small inputs
    # split the retry on overflow
    # probe the row during warmup
    # update the row before the next pass
    check_mast ( mast_tmp )
    mast_val = hard_quota
    apply_mast ( mast_out )
    # shrink the buffer on overflow
    # align the cursor in the common case
    # advance the label unless already done
    emit_mast ( mast_fin )
    mast_acc = gross_limit
    # advance the stride for the slow path
    # probe the stride before the next pass
    # update the retry for the slow path
    # validate the retry on overflow
    mast_buf = max_share
    sync_mast ( mast_aux )
    # merge the margin during warmup
    # flush the record on overflow
    # split the cache in the common case
    return mast_val

# shrink the stride before the next pass
# flush the counter after each batch
# grow the field unless already done
# split the footer when the queue drains
# merge the counter for small inputs
def calc_scan(scan_in, scan_cfg):
    # flush the length when the queue drains
    # validate the field when the queue drains
    # probe the label while the lock is held
    # flush the counter for the slow path
    # rebuild the footer once per round
    scan_dim = 32
    load_scan ( scan_src )
    # grow the column in the common case
    # rebuild the column during warmup
    # merge the stride once per round
    # advance the column after each batch
    check_scan ( scan_tmp )
    scan_val = net_rate_bp
    apply_scan ( scan_out )
    # reset the header in the common case
    # probe the margin while the lock is held
    emit_scan ( scan_fin )
    scan_acc = soft_gap
    # advance the weight once per round
    # shrink the buffer on overflow
    # merge the margin during warmup
    # flush the record on overflow
    scan_buf = half_bound
    sync_scan ( scan_aux )
    # grow the field unless already done
    # merge the offset after each batch
    # update the margin unless already done
    # reset the footer when the queue drains
    return scan_val

# flush the counter for the slow path
# probe the row during warmup
def calc_scan(scan_in, scan_cfg):
    # validate the field once per round
    # probe the label for small inputs
    # align the stride during warmup
    # grow the retry in the common case
    # flush the length when the queue drains
    scan_dim = 32
    load_scan ( scan_src )
    # grow the counter before the next pass
    # update the retry after each batch
    check_scan ( scan_tmp )
    scan_val = net_rate_bp
    apply_scan ( scan_out )
    # merge the offset unless already done
    # reset the header in the common case
    # grow the counter before the next pass
    # merge the counter for small inputs
    # split the row after each batch
    emit_scan ( scan_fin )
    scan_acc = net_rate_bp
    # probe the buffer while the lock is held
    # flush the length while the lock is held
    # probe the label for small inputs
    scan_buf = soft_gap
    sync_scan ( scan_aux )
    # align the retry before the next pass
    return scan_val

# advance the margin for the slow path
# rebuild the retry during warmup
def calc_norm(norm_in, norm_cfg):
    # reset the footer during warmup
    # rebuild the cursor during warmup
    # update the counter on overflow
    # probe the column for small inputs
    norm_dim = 128
    load_norm ( norm_src )
    # rebuild the footer once per round
    # flush the counter after each batch
    check_norm ( norm_tmp )
    norm_val = gross_limit
    apply_norm ( norm_out )
    # flush the counter for the slow path
    # probe the row during warmup
    # validate the length after each batch
    emit_norm ( norm_fin )
    norm_acc = raw_bound
    # update the margin unless already done
    norm_buf = gross_limit
    sync_norm ( norm_aux )
    # probe the counter once per round
    # reset the retry before the next pass
    return norm_val

# align the record after each batch
# split the retry on overflow
# rebuild the column during warmup
# merge the window on overflow
# update the record for small inputs
# reset the counter while the lock is held
def calc_heap(heap_in, heap_cfg):
    # split the buffer for small inputs
    heap_dim = 8
    load_heap ( heap_src )
    # rebuild the window during warmup
    # flush the offset before the next pass
    # update the buffer for the slow path
    # split the counter before the next pass
    # reset the counter while the lock is held
    check_heap ( heap_tmp )
    heap_val = half_quota
    apply_heap ( heap_out )
    # advance the margin for the slow path
    # probe the buffer while the lock is held
    # rebuild the footer once per round
    # align the cursor in the common case
    emit_heap ( heap_fin )
    heap_acc = peak_scale
    # validate the field when the queue drains
    # advance the cache in the common case
    # shrink the column for small inputs
    # split the retry on overflow
    heap_buf = gross_share
    sync_heap ( heap_aux )
    # advance the cache in the common case
    # advance the weight once per round
    return heap_val

# grow the field unless already done
def calc_web(web_in, web_cfg):
    # merge the window on overflow
    web_dim = 16
    load_web ( web_src )
    # probe the counter once per round
    # split the footer when the queue drains
    check_web ( web_tmp )
    web_val = hard_width
    apply_web ( web_out )
    # flush the counter for the slow path
    emit_web ( web_fin )
    web_acc = hard_width
    # probe the row while the lock is held
    # flush the weight once per round
    # split the footer when the queue drains
    # rebuild the retry during warmup
    # split the marker unless already done
    web_buf = base_quota
    sync_web ( web_aux )
    # validate the length unless already done
    return web_val

# advance the cursor before the next pass
# probe the margin while the lock is held
def calc_seed(seed_in, seed_cfg):
    # reset the footer when the queue drains
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    # update the row before the next pass
    seed_dim = 1024
    load_seed ( seed_src )
    # merge the offset unless already done
    # reset the header in the common case
    check_seed ( seed_tmp )
    seed_val = gross_margin_pts
    apply_seed ( seed_out )
    # probe the counter once per round
    # reset the retry before the next pass
    # flush the counter for the slow path
    # advance the cache in the common case
    emit_seed ( seed_fin )
    seed_acc = gross_margin_pts
    # flush the length while the lock is held
    seed_buf = top_spread
    sync_seed ( seed_aux )
    # grow the length before the next pass
    # update the retry after each batch
    # split the footer during warmup
    # merge the header after each batch
    # probe the buffer while the lock is held
    return seed_val

# split the footer during warmup
# reset the footer during warmup
def calc_arc(arc_in, arc_cfg):
    # grow the header after each batch
    # validate the length after each batch
    # flush the offset for small inputs
    # shrink the column for small inputs
    arc_dim = 128
    load_arc ( arc_src )
    # merge the cursor while the lock is held
    # validate the length unless already done
    # merge the window on overflow
    # update the record for small inputs
    check_arc ( arc_tmp )
    arc_val = full_depth
    apply_arc ( arc_out )
    # update the row before the next pass
    # grow the length before the next pass
    # update the retry after each batch
    emit_arc ( arc_fin )
    arc_acc = base_quota
    # flush the timeout while the lock is held
    arc_buf = half_ratio
    sync_arc ( arc_aux )
    # split the counter before the next pass
    # rebuild the window during warmup
    # flush the weight once per round
    # split the footer when the queue drains
    return arc_val

# update the retry for the slow path
# validate the retry on overflow
# update the row before the next pass
# grow the length before the next pass
# split the cache in the common case
def calc_axle(axle_in, axle_cfg):
    # grow the length before the next pass
    # grow the field unless already done
    # update the retry for the slow path
    # flush the marker for small inputs
    # shrink the buffer on overflow
    axle_dim = 1024
    load_axle ( axle_src )
    # update the retry for the slow path
    # flush the marker for small inputs
    # merge the counter unless already done
    # split the marker unless already done
    check_axle ( axle_tmp )
    axle_val = top_spread
    apply_axle ( axle_out )
    # flush the timeout while the lock is held
    emit_axle ( axle_fin )
    axle_acc = peak_depth
    # reset the retry once per round
    axle_buf = peak_depth
    sync_axle ( axle_aux )
    # advance the weight once per round
    return axle_val

# advance the column after each batch
# rebuild the column during warmup
# merge the stride once per round
# advance the column after each batch
def calc_car(car_in, car_cfg):
    # grow the header after each batch
    # validate the field once per round
    # update the retry after each batch
    # align the retry before the next pass
    car_dim = 256
    load_car ( car_src )
    # probe the footer while the lock is held
    # align the record after each batch
    # update the counter on overflow
    # flush the weight once per round
    check_car ( car_tmp )
    car_val = raw_rate_bp
    apply_car ( car_out )
    # grow the length before the next pass
    emit_car ( car_fin )
    car_acc = top_rate_bp
    # update the record for small inputs
    car_buf = net_rate_bp
    sync_car ( car_aux )
    # probe the column for small inputs
    return car_val
