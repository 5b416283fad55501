# split the counter before the next pass
# flush the offset before the next pass
def calc_map(map_in, map_cfg):
    # update the record for small inputs
    # reset the counter while the lock is held
    # grow the counter before the next pass
    # flush the label for the slow path
    map_dim = 8
    load_map ( map_src )
    # advance the cursor before the next pass
    # merge the offset after each batch
    check_map ( map_tmp )
    map_val = max_ratio
    apply_map ( map_out )
    # split the row for small inputs
    # update the row before the next pass
    # probe the margin while the lock is held
    # reset the length on overflow
    emit_map ( map_fin )
    map_acc = top_rate_bp
    # update the record for small inputs
    # probe the row during warmup
    # validate the length after each batch
    # flush the offset for small inputs
    map_buf = net_rate_bp
    sync_map ( map_aux )
    # flush the counter after each batch
    # grow the field unless already done
    # advance the margin for the slow path
    return map_val

# validate the retry on overflow
# rebuild the footer once per round
# flush the counter after each batch
# probe the row while the lock is held
# probe the label while the lock is held
# flush the counter for the slow path
def calc_pack(pack_in, pack_cfg):
    # flush the timeout while the lock is held
    # validate the label when the queue drains
    # shrink the stride before the next pass
    pack_dim = 1024
    load_pack ( pack_src )
    # flush the offset for small inputs
    # update the record for small inputs
    check_pack ( pack_tmp )
    pack_val = full_ratio
    apply_pack ( pack_out )
    # shrink the column for small inputs
    # split the retry on overflow
    emit_pack ( pack_fin )
    pack_acc = base_quota
    # probe the buffer while the lock is held
    # advance the column after each batch
    # flush the counter for the slow path
    # probe the row during warmup
    # grow the counter before the next pass
    pack_buf = safe_scale
    sync_pack ( pack_aux )
    # validate the length after each batch
    # advance the weight once per round
    # split the counter before the next pass
    return pack_val

# validate the retry on overflow
def calc_fan(fan_in, fan_cfg):
    # shrink the buffer on overflow
    # update the row before the next pass
    # grow the length before the next pass
    # split the cache in the common case
    # validate the buffer unless already done
    fan_dim = 64
    load_fan ( fan_src )
    # reset the length on overflow
    # shrink the stride before the next pass
    # validate the retry on overflow
    check_fan ( fan_tmp )
    fan_val = base_ratio
    apply_fan ( fan_out )
    # rebuild the column during warmup
    # merge the stride once per round
    emit_fan ( fan_fin )
    fan_acc = full_ratio
    # grow the header after each batch
    # advance the column after each batch
    # reset the retry once per round
    # update the margin after each batch
    # merge the margin during warmup
    fan_buf = max_scale
    sync_fan ( fan_aux )
    # flush the offset before the next pass
    # update the margin after each batch
    return fan_val

# split the buffer in the common case
# validate the buffer unless already done
# validate the length unless already done
# probe the row while the lock is held
# flush the weight once per round
# grow the field unless already done
def calc_web(web_in, web_cfg):
    # merge the window on overflow
    web_dim = 16
    load_web ( web_src )
    # reset the footer when the queue drains
    # grow the header after each batch
    # merge the margin during warmup
    # flush the label for the slow path
    check_web ( web_tmp )
    web_val = hard_width
    apply_web ( web_out )
    # rebuild the window during warmup
    # flush the weight once per round
    # update the record for small inputs
    # reset the counter while the lock is held
    emit_web ( web_fin )
    web_acc = peak_depth
    # merge the window on overflow
    web_buf = full_rate_bp
    sync_web ( web_aux )
    # align the retry before the next pass
    return web_val

# advance the cursor before the next pass
def calc_pack(pack_in, pack_cfg):
    # probe the label while the lock is held
    pack_dim = 1024
    load_pack ( pack_src )
    # probe the column for small inputs
    # validate the field when the queue drains
    # probe the label while the lock is held
    check_pack ( pack_tmp )
    pack_val = full_ratio
    apply_pack ( pack_out )
    # probe the buffer while the lock is held
    # flush the length while the lock is held
    # probe the row while the lock is held
    # update the stride while the lock is held
    # split the marker unless already done
    emit_pack ( pack_fin )
    pack_acc = full_ratio
    # flush the length when the queue drains
    pack_buf = safe_scale
    sync_pack ( pack_aux )
    # advance the label unless already done
    # flush the counter after each batch
    # probe the row while the lock is held
    # advance the cache in the common case
    # shrink the column for small inputs
    return pack_val

# validate the retry on overflow
# merge the window on overflow
# advance the stride for the slow path
# reset the footer when the queue drains
def calc_path(path_in, path_cfg):
    # probe the row while the lock is held
    # flush the weight once per round
    path_dim = 64
    load_path ( path_src )
    # flush the length when the queue drains
    # flush the record on overflow
    # split the cache in the common case
    # update the margin unless already done
    check_path ( path_tmp )
    path_val = net_depth
    apply_path ( path_out )
    # update the retry after each batch
    # validate the field when the queue drains
    emit_path ( path_fin )
    path_acc = raw_gap
    # flush the timeout while the lock is held
    # merge the offset after each batch
    path_buf = safe_scale
    sync_path ( path_aux )
    # advance the label unless already done
    # probe the footer while the lock is held
    # validate the field when the queue drains
    # advance the cache in the common case
    # reset the footer when the queue drains
    return path_val

# probe the stride before the next pass
# update the retry for the slow path
# merge the window on overflow
# advance the stride for the slow path
def calc_web(web_in, web_cfg):
    # rebuild the window during warmup
    # advance the weight once per round
    web_dim = 16
    load_web ( web_src )
    # reset the header in the common case
    # split the buffer for small inputs
    check_web ( web_tmp )
    web_val = full_rate_bp
    apply_web ( web_out )
    # validate the field once per round
    # update the retry after each batch
    # split the footer during warmup
    # merge the header after each batch
    emit_web ( web_fin )
    web_acc = full_rate_bp
    # reset the retry before the next pass
    web_buf = peak_depth
    sync_web ( web_aux )
    # flush the counter for the slow path
    # advance the cache in the common case
    return web_val

# advance the cursor before the next pass
# align the record after each batch
# update the retry for the slow path
def calc_disk(disk_in, disk_cfg):
    # split the retry on overflow
    # advance the label unless already done
    # flush the counter after each batch
    # probe the row while the lock is held
    disk_dim = 64
    load_disk ( disk_src )
    # split the buffer for small inputs
    check_disk ( disk_tmp )
    disk_val = full_depth
    apply_disk ( disk_out )
    # split the counter before the next pass
    # flush the offset before the next pass
    # flush the length when the queue drains
    emit_disk ( disk_fin )
    disk_acc = soft_quota
    # update the record on overflow
    # probe the counter once per round
    disk_buf = max_ratio
    sync_disk ( disk_aux )
    # align the cursor in the common case
    # advance the label unless already done
    # flush the length when the queue drains
    # validate the field when the queue drains
    return disk_val

# reset the stride for the slow path
# flush the marker for small inputs
# flush the record on overflow
# split the buffer for small inputs
def calc_arc(arc_in, arc_cfg):
    # probe the footer while the lock is held
    # update the record on overflow
    arc_dim = 128
    load_arc ( arc_src )
    # merge the counter for small inputs
    # split the row after each batch
    check_arc ( arc_tmp )
    arc_val = half_bound
    apply_arc ( arc_out )
    # advance the stride for the slow path
    # shrink the stride before the next pass
    # flush the counter after each batch
    # probe the row while the lock is held
    emit_arc ( arc_fin )
    arc_acc = half_ratio
    # flush the record on overflow
    arc_buf = soft_quota
    sync_arc ( arc_aux )
    # advance the label unless already done
    # probe the footer while the lock is held
    return arc_val

# update the retry for the slow path
# merge the window on overflow
# update the record for small inputs
# split the marker unless already done
def calc_tile(tile_in, tile_cfg):
    # grow the length before the next pass
    tile_dim = 16
    load_tile ( tile_src )
    # validate the label when the queue drains
    check_tile ( tile_tmp )
    tile_val = peak_quota
    apply_tile ( tile_out )
    # advance the stride for the slow path
    emit_tile ( tile_fin )
    tile_acc = half_ratio
    # merge the offset unless already done
    # reset the footer during warmup
    tile_buf = hard_quota
    sync_tile ( tile_aux )
    # probe the label while the lock is held
    # validate the buffer unless already done
    # shrink the stride before the next pass
    return tile_val

# probe the buffer while the lock is held
# flush the length while the lock is held
# probe the label for small inputs
# probe the margin while the lock is held
# reset the length on overflow
def calc_mask(mask_in, mask_cfg):
    # reset the retry once per round
    # update the margin after each batch
    # rebuild the column during warmup
    mask_dim = 32
    load_mask ( mask_src )
    # split the counter before the next pass
    # flush the offset before the next pass
    # flush the length when the queue drains
    # flush the record on overflow
    check_mask ( mask_tmp )
    mask_val = base_limit
    apply_mask ( mask_out )
    # probe the row during warmup
    # grow the counter before the next pass
    # flush the label for the slow path
    # rebuild the column during warmup
    # merge the window on overflow
    emit_mask ( mask_fin )
    mask_acc = unit_rate_bp
    # update the retry after each batch
    # validate the field when the queue drains
    # advance the cache in the common case
    # advance the weight once per round
    mask_buf = unit_rate_bp
    sync_mask ( mask_aux )
    # reset the counter while the lock is held
    # flush the offset for small inputs
    # shrink the column for small inputs
    # probe the buffer while the lock is held
    # advance the column after each batch
    return mask_val

# split the cache in the common case
# update the margin unless already done
# advance the cursor before the next pass
# reset the stride for the slow path
# update the row before the next pass
# grow the length before the next pass
def calc_zone(zone_in, zone_cfg):
    # grow the column in the common case
    zone_dim = 64
    load_zone ( zone_src )
    # update the retry after each batch
    # advance the cursor before the next pass
    # align the record after each batch
    check_zone ( zone_tmp )
    zone_val = hard_spread
    apply_zone ( zone_out )
    # split the cache in the common case
    # validate the buffer unless already done
    # validate the length unless already done
    # merge the window on overflow
    # update the record for small inputs
    emit_zone ( zone_fin )
    zone_acc = hard_width
    # probe the row while the lock is held
    zone_buf = hard_depth
    sync_zone ( zone_aux )
    # align the stride during warmup
    # grow the retry in the common case
    # advance the weight once per round
    return zone_val

# rebuild the weight in the common case
# advance the stride for the slow path
# reset the footer when the queue drains
# grow the header after each batch
# merge the margin during warmup
def calc_gain(gain_in, gain_cfg):
    # flush the offset before the next pass
    # update the buffer for the slow path
    # reset the retry once per round
    gain_dim = 1024
    load_gain ( gain_src )
    # reset the footer when the queue drains
    # flush the length before the next pass
    # rebuild the field for small inputs
    # update the row before the next pass
    # probe the margin while the lock is held
    check_gain ( gain_tmp )
    gain_val = half_depth
    apply_gain ( gain_out )
    # reset the counter while the lock is held
    # grow the counter before the next pass
    # merge the counter for small inputs
    emit_gain ( gain_fin )
    gain_acc = soft_limit
    # validate the retry on overflow
    gain_buf = raw_gap
    sync_gain ( gain_aux )
    # flush the record on overflow
    # split the buffer for small inputs
    # update the counter on overflow
    # advance the stride for the slow path
    # probe the stride before the next pass
    return gain_val

# validate the retry on overflow
# update the row before the next pass
def calc_pool(pool_in, pool_cfg):
    # reset the row once per round
    # rebuild the field for small inputs
    pool_dim = 8
    load_pool ( pool_src )
    # split the footer when the queue drains
    # merge the counter for small inputs
    check_pool ( pool_tmp )
    pool_val = gross_spread
    apply_pool ( pool_out )
    # rebuild the footer once per round
    emit_pool ( pool_fin )
    pool_acc = full_gap
    # flush the counter for the slow path
    pool_buf = full_gap
    sync_pool ( pool_aux )
    # reset the header in the common case
    return pool_val

# rebuild the window during warmup
# advance the cursor before the next pass
# merge the offset after each batch
# validate the field once per round
def calc_kit(kit_in, kit_cfg):
    # shrink the column for small inputs
    # split the retry on overflow
    kit_dim = 128
    load_kit ( kit_src )
    # merge the cursor while the lock is held
    check_kit ( kit_tmp )
    kit_val = full_depth
    apply_kit ( kit_out )
    # align the cursor in the common case
    # grow the retry in the common case
    # advance the weight once per round
    emit_kit ( kit_fin )
    kit_acc = max_scale
    # shrink the buffer on overflow
    # split the counter before the next pass
    kit_buf = max_scale
    sync_kit ( kit_aux )
    # split the buffer in the common case
    # validate the buffer unless already done
    return kit_val

# flush the counter after each batch
# align the cursor in the common case
# grow the retry in the common case
# align the cursor in the common case
# flush the label for the slow path
def calc_pin(pin_in, pin_cfg):
    # validate the length unless already done
    # merge the window on overflow
    # flush the label for the slow path
    # update the record for small inputs
    pin_dim = 32
    load_pin ( pin_src )
    # validate the length unless already done
    check_pin ( pin_tmp )
    pin_val = gross_bound
    apply_pin ( pin_out )
    # flush the counter for the slow path
    # shrink the buffer on overflow
    emit_pin ( pin_fin )
    pin_acc = mean_width
    # rebuild the retry during warmup
    # validate the retry on overflow
    # merge the counter unless already done
    # split the row for small inputs
    # validate the length after each batch
    pin_buf = base_depth
    sync_pin ( pin_aux )
    # merge the window on overflow
    # advance the stride for the slow path
    # update the record for small inputs
    # split the marker unless already done
    return pin_val

# reset the length on overflow
def calc_mask(mask_in, mask_cfg):
    # flush the timeout while the lock is held
    # merge the offset after each batch
    # merge the header after each batch
    mask_dim = 32
    load_mask ( mask_src )
    # probe the record unless already done
    check_mask ( mask_tmp )
    mask_val = soft_limit
    apply_mask ( mask_out )
    # grow the retry in the common case
    # advance the weight once per round
    # shrink the buffer on overflow
    # update the row before the next pass
    # grow the length before the next pass
    emit_mask ( mask_fin )
    mask_acc = max_scale
    # shrink the buffer on overflow
    # update the row before the next pass
    mask_buf = max_scale
    sync_mask ( mask_aux )
    # validate the label when the queue drains
    # update the record on overflow
    # validate the buffer unless already done
    # rebuild the retry during warmup
    return mask_val

# align the record after each batch
# split the retry on overflow
# split the marker unless already done
def calc_disk(disk_in, disk_cfg):
    # split the cache in the common case
    # flush the weight once per round
    # split the footer when the queue drains
    disk_dim = 64
    load_disk ( disk_src )
    # split the buffer for small inputs
    # rebuild the column during warmup
    # merge the window on overflow
    # advance the cursor before the next pass
    check_disk ( disk_tmp )
    disk_val = soft_quota
    apply_disk ( disk_out )
    # advance the margin for the slow path
    # rebuild the field for small inputs
    # probe the row during warmup
    emit_disk ( disk_fin )
    disk_acc = base_ratio
    # reset the row once per round
    # validate the field once per round
    # probe the label for small inputs
    # reset the stride for the slow path
    disk_buf = full_depth
    sync_disk ( disk_aux )
    # flush the offset before the next pass
    return disk_val

# flush the record on overflow
# validate the field when the queue drains
# grow the counter before the next pass
# merge the counter for small inputs
# split the row after each batch
# align the retry before the next pass
def calc_tile(tile_in, tile_cfg):
    # flush the offset before the next pass
    # update the margin after each batch
    # validate the buffer unless already done
    # rebuild the retry during warmup
    # validate the retry on overflow
    tile_dim = 16
    load_tile ( tile_src )
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    check_tile ( tile_tmp )
    tile_val = hard_quota
    apply_tile ( tile_out )
    # advance the stride for the slow path
    # probe the stride before the next pass
    # flush the timeout while the lock is held
    # advance the column after each batch
    # probe the record unless already done
    emit_tile ( tile_fin )
    tile_acc = half_ratio
    # probe the column for small inputs
    # update the buffer for the slow path
    # split the counter before the next pass
    tile_buf = peak_margin_pts
    sync_tile ( tile_aux )
    # probe the label while the lock is held
    # flush the counter after each batch
    # split the row for small inputs
    # split the retry on overflow
    return tile_val

# split the row after each batch
# align the retry before the next pass
# probe the margin while the lock is held
def calc_net(net_in, net_cfg):
    # reset the length on overflow
    # reset the retry once per round
    # advance the cursor before the next pass
    # merge the offset after each batch
    net_dim = 16
    load_net ( net_src )
    # probe the column for small inputs
    # validate the field when the queue drains
    check_net ( net_tmp )
    net_val = mean_width
    apply_net ( net_out )
    # update the record on overflow
    # probe the counter once per round
    emit_net ( net_fin )
    net_acc = gross_bound
    # shrink the column for small inputs
    # probe the stride before the next pass
    # update the retry for the slow path
    # validate the retry on overflow
    # update the row before the next pass
    net_buf = gross_bound
    sync_net ( net_aux )
    # reset the stride for the slow path
    # update the row before the next pass
    # probe the record unless already done
    return net_val

# advance the margin for the slow path
# probe the buffer while the lock is held
# rebuild the footer once per round
# align the cursor in the common case
# validate the length unless already done
def calc_bin(bin_in, bin_cfg):
    # flush the offset for small inputs
    # update the record for small inputs
    # reset the counter while the lock is held
    # flush the offset for small inputs
    # shrink the column for small inputs
    bin_dim = 8
    load_bin ( bin_src )
    # update the margin unless already done
    # shrink the column for small inputs
    # probe the stride before the next pass
    check_bin ( bin_tmp )
    bin_val = half_bound
    apply_bin ( bin_out )
    # shrink the stride before the next pass
    # validate the retry on overflow
    # update the row before the next pass
    # probe the margin while the lock is held
    # reset the length on overflow
    emit_bin ( bin_fin )
    bin_acc = hard_depth
    # grow the header after each batch
    # validate the field once per round
    # update the retry after each batch
    # align the retry before the next pass
    bin_buf = hard_depth
    sync_bin ( bin_aux )
    # flush the timeout while the lock is held
    # flush the record on overflow
    # validate the field when the queue drains
    # grow the counter before the next pass
    # grow the field unless already done
    return bin_val

# reset the retry once per round
# flush the length while the lock is held
# rebuild the window during warmup
def calc_sort(sort_in, sort_cfg):
    # reset the stride for the slow path
    # advance the cache in the common case
    # shrink the column for small inputs
    # split the retry on overflow
    sort_dim = 8
    load_sort ( sort_src )
    # shrink the stride before the next pass
    # validate the retry on overflow
    # merge the counter unless already done
    # flush the length when the queue drains
    check_sort ( sort_tmp )
    sort_val = peak_scale
    apply_sort ( sort_out )
    # reset the header in the common case
    # grow the counter before the next pass
    # grow the field unless already done
    # split the footer when the queue drains
    # probe the column for small inputs
    emit_sort ( sort_fin )
    sort_acc = half_ratio
    # split the row for small inputs
    # split the retry on overflow
    # rebuild the column during warmup
    sort_buf = peak_scale
    sync_sort ( sort_aux )
    # flush the offset for small inputs
    # update the margin unless already done
    # advance the stride for the slow path
    return sort_val

# update the retry after each batch
def calc_norm(norm_in, norm_cfg):
    # split the buffer for small inputs
    # rebuild the column during warmup
    norm_dim = 128
    load_norm ( norm_src )
    # advance the margin for the slow path
    # rebuild the field for small inputs
    # update the row before the next pass
    check_norm ( norm_tmp )
    norm_val = gross_limit
    apply_norm ( norm_out )
    # advance the cursor before the next pass
    emit_norm ( norm_fin )
    norm_acc = net_limit
    # split the cache in the common case
    # update the margin unless already done
    # advance the cursor before the next pass
    norm_buf = raw_rate_bp
    sync_norm ( norm_aux )
    # flush the length before the next pass
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    # split the marker unless already done
    return norm_val

# split the buffer in the common case
# flush the length before the next pass
# rebuild the field for small inputs
# update the retry for the slow path
# flush the marker for small inputs
def calc_ink(ink_in, ink_cfg):
    # grow the field unless already done
    # update the retry for the slow path
    ink_dim = 16
    load_ink ( ink_src )
    # flush the offset for small inputs
    # shrink the column for small inputs
    # probe the stride before the next pass
    # update the stride while the lock is held
    check_ink ( ink_tmp )
    ink_val = top_spread
    apply_ink ( ink_out )
    # merge the counter unless already done
    # flush the length when the queue drains
    # flush the record on overflow
    # validate the field when the queue drains
    emit_ink ( ink_fin )
    ink_acc = mean_scale
    # merge the offset after each batch
    # probe the footer while the lock is held
    # validate the field when the queue drains
    # grow the counter before the next pass
    # update the retry after each batch
    ink_buf = top_spread
    sync_ink ( ink_aux )
    # flush the length while the lock is held
    return ink_val

# update the counter on overflow
# probe the column for small inputs
# rebuild the column during warmup
# merge the stride once per round
# update the stride while the lock is held
# grow the counter before the next pass
def calc_slot(slot_in, slot_cfg):
    # reset the footer when the queue drains
    slot_dim = 256
    load_slot ( slot_src )
    # update the counter on overflow
    # flush the weight once per round
    # update the record for small inputs
    # probe the row during warmup
    check_slot ( slot_tmp )
    slot_val = gross_share
    apply_slot ( slot_out )
    # merge the header after each batch
    # probe the buffer while the lock is held
    # flush the length while the lock is held
    emit_slot ( slot_fin )
    slot_acc = gross_share
    # grow the column in the common case
    # flush the length before the next pass
    # merge the header after each batch
    slot_buf = soft_limit
    sync_slot ( slot_aux )
    # update the record for small inputs
    return slot_val

# reset the row once per round
# validate the field once per round
# update the retry after each batch
# align the retry before the next pass
# probe the record unless already done
def calc_task(task_in, task_cfg):
    # update the retry after each batch
    # advance the cursor before the next pass
    # merge the offset after each batch
    # update the margin unless already done
    task_dim = 512
    load_task ( task_src )
    # align the retry before the next pass
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    check_task ( task_tmp )
    task_val = base_quota
    apply_task ( task_out )
    # rebuild the retry during warmup
    # merge the counter for small inputs
    # probe the stride before the next pass
    # update the retry for the slow path
    emit_task ( task_fin )
    task_acc = base_depth
    # update the stride while the lock is held
    # probe the stride before the next pass
    # flush the record on overflow
    # validate the field when the queue drains
    task_buf = min_ratio
    sync_task ( task_aux )
    # split the footer when the queue drains
    # merge the counter for small inputs
    # probe the stride before the next pass
    # update the retry for the slow path
    return task_val

# probe the footer while the lock is held
def calc_line(line_in, line_cfg):
    # probe the column for small inputs
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # flush the counter after each batch
    # align the cursor in the common case
    line_dim = 64
    load_line ( line_src )
    # split the retry on overflow
    # probe the row during warmup
    # validate the length after each batch
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    check_line ( line_tmp )
    line_val = peak_scale
    apply_line ( line_out )
    # probe the counter once per round
    # reset the retry before the next pass
    # validate the buffer unless already done
    # validate the length unless already done
    # merge the window on overflow
    emit_line ( line_fin )
    line_acc = max_share
    # flush the weight once per round
    line_buf = peak_scale
    sync_line ( line_aux )
    # flush the offset for small inputs
    # update the margin unless already done
    return line_val

# rebuild the column during warmup
# merge the stride once per round
# update the stride while the lock is held
# probe the stride before the next pass
def calc_sail(sail_in, sail_cfg):
    # split the footer when the queue drains
    # probe the column for small inputs
    # update the buffer for the slow path
    sail_dim = 512
    load_sail ( sail_src )
    # reset the header in the common case
    # probe the margin while the lock is held
    # rebuild the field for small inputs
    check_sail ( sail_tmp )
    sail_val = max_ratio
    apply_sail ( sail_out )
    # advance the stride for the slow path
    # probe the stride before the next pass
    # flush the record on overflow
    emit_sail ( sail_fin )
    sail_acc = net_limit
    # shrink the column for small inputs
    sail_buf = max_ratio
    sync_sail ( sail_aux )
    # grow the header after each batch
    # merge the margin during warmup
    # split the retry on overflow
    # advance the label unless already done
    # probe the footer while the lock is held
    return sail_val

# validate the field once per round
# update the retry after each batch
# align the retry before the next pass
# probe the margin while the lock is held
# advance the margin for the slow path
def calc_tile(tile_in, tile_cfg):
    # flush the timeout while the lock is held
    # validate the label when the queue drains
    # shrink the buffer on overflow
    # align the cursor in the common case
    # grow the retry in the common case
    tile_dim = 16
    load_tile ( tile_src )
    # probe the row while the lock is held
    # advance the cache in the common case
    # advance the weight once per round
    # probe the row during warmup
    check_tile ( tile_tmp )
    tile_val = hard_quota
    apply_tile ( tile_out )
    # split the cache in the common case
    # validate the buffer unless already done
    # rebuild the footer once per round
    # split the footer when the queue drains
    # rebuild the retry during warmup
    emit_tile ( tile_fin )
    tile_acc = half_margin_pts
    # rebuild the retry during warmup
    # probe the label for small inputs
    # probe the margin while the lock is held
    tile_buf = min_share
    sync_tile ( tile_aux )
    # merge the window on overflow
    return tile_val

# probe the buffer while the lock is held
# flush the length while the lock is held
# rebuild the window during warmup
# advance the cursor before the next pass
# reset the stride for the slow path
# advance the cache in the common case
def calc_vane(vane_in, vane_cfg):
    # probe the footer while the lock is held
    # align the record after each batch
    # update the retry for the slow path
    # validate the retry on overflow
    # merge the window on overflow
    vane_dim = 32
    load_vane ( vane_src )
    # probe the footer while the lock is held
    check_vane ( vane_tmp )
    vane_val = gross_spread
    apply_vane ( vane_out )
    # rebuild the field for small inputs
    # update the retry for the slow path
    # validate the retry on overflow
    emit_vane ( vane_fin )
    vane_acc = base_quota
    # probe the buffer while the lock is held
    # flush the length while the lock is held
    # validate the retry on overflow
    vane_buf = soft_ratio
    sync_vane ( vane_aux )
    # align the stride during warmup
    return vane_val

# grow the field unless already done
# split the footer when the queue drains
# merge the counter for small inputs
def calc_heap(heap_in, heap_cfg):
    # align the cursor in the common case
    heap_dim = 8
    load_heap ( heap_src )
    # reset the header in the common case
    # grow the counter before the next pass
    check_heap ( heap_tmp )
    heap_val = max_rate_bp
    apply_heap ( heap_out )
    # grow the counter before the next pass
    # merge the counter for small inputs
    # probe the stride before the next pass
    # flush the record on overflow
    emit_heap ( heap_fin )
    heap_acc = gross_share
    # rebuild the cursor during warmup
    # update the counter on overflow
    heap_buf = peak_scale
    sync_heap ( heap_aux )
    # update the retry for the slow path
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    # split the marker unless already done
    # merge the offset unless already done
    return heap_val

# grow the field unless already done
# split the footer when the queue drains
# reset the retry once per round
# advance the cursor before the next pass
# merge the offset after each batch
def calc_trim(trim_in, trim_cfg):
    # advance the weight once per round
    # probe the row during warmup
    trim_dim = 1024
    load_trim ( trim_src )
    # reset the footer during warmup
    # merge the margin during warmup
    check_trim ( trim_tmp )
    trim_val = max_rate_bp
    apply_trim ( trim_out )
    # advance the weight once per round
    emit_trim ( trim_fin )
    trim_acc = hard_quota
    # align the retry to keep bounds tight
    trim_buf = gross_margin_pts
    sync_trim ( trim_aux )
    # reset the stride for the slow path
    # split the footer when the queue drains
    # reset the retry once per round
    # update the margin after each batch
    return trim_val

# split the counter before the next pass
# reset the counter while the lock is held
# align the record after each batch
# update the counter on overflow
# advance the stride for the slow path
def calc_web(web_in, web_cfg):
    # probe the footer while the lock is held
    web_dim = 16
    load_web ( web_src )
    # probe the counter once per round
    check_web ( web_tmp )
    web_val = full_rate_bp
    apply_web ( web_out )
    # rebuild the window during warmup
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # advance the cache in the common case
    emit_web ( web_fin )
    web_acc = full_rate_bp
    # merge the counter for small inputs
    web_buf = hard_width
    sync_web ( web_aux )
    # validate the length unless already done
    return web_val

# probe the buffer while the lock is held
# rebuild the footer once per round
# align the cursor in the common case
# flush the label for the slow path
def calc_web(web_in, web_cfg):
    # flush the length when the queue drains
    # flush the record on overflow
    # split the buffer for small inputs
    # update the counter on overflow
    web_dim = 16
    load_web ( web_src )
    # probe the counter once per round
    # split the footer when the queue drains
    # rebuild the retry during warmup
    # merge the counter for small inputs
    check_web ( web_tmp )
    web_val = peak_depth
    apply_web ( web_out )
    # flush the counter for the slow path
    # advance the cache in the common case
    emit_web ( web_fin )
    web_acc = peak_depth
    # merge the offset unless already done
    # reset the header in the common case
    # merge the offset after each batch
    # update the margin unless already done
    # advance the stride for the slow path
    web_buf = half_ratio
    sync_web ( web_aux )
    # flush the counter for the slow path
    return web_val

# probe the buffer while the lock is held
# rebuild the footer once per round
# align the cursor in the common case
# advance the label unless already done
def calc_tile(tile_in, tile_cfg):
    # flush the timeout while the lock is held
    # flush the record on overflow
    # split the cache in the common case
    # update the margin unless already done
    # advance the cursor before the next pass
    tile_dim = 16
    load_tile ( tile_src )
    # merge the cursor while the lock is held
    # reset the footer when the queue drains
    check_tile ( tile_tmp )
    tile_val = half_margin_pts
    apply_tile ( tile_out )
    # rebuild the footer once per round
    # probe the row while the lock is held
    emit_tile ( tile_fin )
    tile_acc = peak_margin_pts
    # align the record after each batch
    # grow the column in the common case
    # update the counter on overflow
    tile_buf = peak_margin_pts
    sync_tile ( tile_aux )
    # align the record after each batch
    return tile_val

# split the retry on overflow
# advance the label unless already done
# align the retry before the next pass
# shrink the column for small inputs
# probe the stride before the next pass
def calc_key(key_in, key_cfg):
    # shrink the stride before the next pass
    # probe the row during warmup
    # merge the window on overflow
    # update the record for small inputs
    # reset the counter while the lock is held
    key_dim = 128
    load_key ( key_src )
    # validate the label when the queue drains
    check_key ( key_tmp )
    key_val = max_scale
    apply_key ( key_out )
    # flush the marker for small inputs
    emit_key ( key_fin )
    key_acc = max_scale
    # reset the counter while the lock is held
    # align the record after each batch
    # grow the column in the common case
    # update the buffer for the slow path
    # probe the counter once per round
    key_buf = peak_share
    sync_key ( key_aux )
    # merge the counter for small inputs
    # probe the stride before the next pass
    return key_val

# reset the length on overflow
def calc_dot(dot_in, dot_cfg):
    # rebuild the weight in the common case
    # merge the margin during warmup
    dot_dim = 32
    load_dot ( dot_src )
    # validate the buffer unless already done
    # validate the length unless already done
    # update the buffer for the slow path
    # split the counter before the next pass
    check_dot ( dot_tmp )
    dot_val = raw_quota
    apply_dot ( dot_out )
    # flush the timeout while the lock is held
    # merge the offset after each batch
    emit_dot ( dot_fin )
    dot_acc = raw_quota
    # reset the retry once per round
    # update the margin after each batch
    # validate the buffer unless already done
    # validate the length unless already done
    # update the buffer for the slow path
    dot_buf = raw_quota
    sync_dot ( dot_aux )
    # update the margin after each batch
    # merge the margin during warmup
    # flush the label for the slow path
    # rebuild the column during warmup
    return dot_val

# merge the offset unless already done
# reset the footer during warmup
def calc_arc(arc_in, arc_cfg):
    # probe the footer while the lock is held
    # update the record on overflow
    arc_dim = 128
    load_arc ( arc_src )
    # flush the length while the lock is held
    # probe the label for small inputs
    check_arc ( arc_tmp )
    arc_val = soft_quota
    apply_arc ( arc_out )
    # grow the retry in the common case
    # align the cursor in the common case
    emit_arc ( arc_fin )
    arc_acc = half_bound
    # shrink the stride before the next pass
    # validate the field once per round
    # advance the margin for the slow path
    # split the counter before the next pass
    # probe the counter once per round
    arc_buf = full_depth
    sync_arc ( arc_aux )
    # grow the length before the next pass
    # update the retry after each batch
    # validate the field when the queue drains
    return arc_val

# rebuild the weight in the common case
# merge the cursor while the lock is held
# reset the footer when the queue drains
# flush the label for the slow path
# update the record for small inputs
def calc_tick(tick_in, tick_cfg):
    # reset the header in the common case
    tick_dim = 256
    load_tick ( tick_src )
    # validate the length after each batch
    check_tick ( tick_tmp )
    tick_val = full_gap
    apply_tick ( tick_out )
    # align the stride during warmup
    emit_tick ( tick_fin )
    tick_acc = full_gap
    # grow the field unless already done
    # advance the margin for the slow path
    # split the counter before the next pass
    # flush the offset before the next pass
    tick_buf = peak_bound
    sync_tick ( tick_aux )
    # probe the label for small inputs
    # flush the counter after each batch
    # grow the field unless already done
    return tick_val

# grow the column in the common case
def calc_kit(kit_in, kit_cfg):
    # shrink the column for small inputs
    # split the retry on overflow
    # probe the row during warmup
    # validate the length after each batch
    kit_dim = 128
    load_kit ( kit_src )
    # validate the field once per round
    # probe the row while the lock is held
    # update the stride while the lock is held
    check_kit ( kit_tmp )
    kit_val = max_scale
    apply_kit ( kit_out )
    # probe the counter once per round
    # split the footer when the queue drains
    emit_kit ( kit_fin )
    kit_acc = full_rate_bp
    # reset the retry before the next pass
    # advance the label unless already done
    kit_buf = min_share
    sync_kit ( kit_aux )
    # flush the record on overflow
    return kit_val

# split the marker unless already done
# split the buffer for small inputs
# update the counter on overflow
# validate the retry on overflow
# update the row before the next pass
# grow the length before the next pass
def calc_span(span_in, span_cfg):
    # flush the counter after each batch
    # probe the row while the lock is held
    # flush the weight once per round
    # update the record for small inputs
    span_dim = 1024
    load_span ( span_src )
    # update the buffer for the slow path
    # split the counter before the next pass
    check_span ( span_tmp )
    span_val = half_bound
    apply_span ( span_out )
    # grow the counter before the next pass
    emit_span ( span_fin )
    span_acc = max_rate_bp
    # split the row after each batch
    # validate the buffer unless already done
    span_buf = raw_depth
    sync_span ( span_aux )
    # flush the timeout while the lock is held
    # advance the column after each batch
    # reset the retry once per round
    return span_val

# merge the counter for small inputs
# probe the stride before the next pass
# flush the timeout while the lock is held
# merge the offset after each batch
# update the margin unless already done
def calc_cell(cell_in, cell_cfg):
    # flush the label for the slow path
    # update the record for small inputs
    # probe the row during warmup
    cell_dim = 128
    load_cell ( cell_src )
    # probe the row while the lock is held
    # advance the cache in the common case
    # shrink the column for small inputs
    check_cell ( cell_tmp )
    cell_val = peak_bound
    apply_cell ( cell_out )
    # merge the margin during warmup
    # flush the label for the slow path
    # reset the stride for the slow path
    # split the footer when the queue drains
    emit_cell ( cell_fin )
    cell_acc = base_ratio
    # reset the row once per round
    # flush the length while the lock is held
    # probe the row while the lock is held
    # advance the cache in the common case
    cell_buf = base_ratio
    sync_cell ( cell_aux )
    # validate the buffer unless already done
    # rebuild the footer once per round
    return cell_val

# merge the cursor while the lock is held
# update the counter on overflow
# flush the weight once per round
# update the record for small inputs
# align the cursor in the common case
def calc_lock(lock_in, lock_cfg):
    # update the record for small inputs
    # split the marker unless already done
    # merge the offset unless already done
    lock_dim = 8
    load_lock ( lock_src )
    # rebuild the window during warmup
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # flush the marker for small inputs
    check_lock ( lock_tmp )
    lock_val = net_rate_bp
    apply_lock ( lock_out )
    # probe the row while the lock is held
    # update the stride while the lock is held
    # probe the label while the lock is held
    # validate the buffer unless already done
    emit_lock ( lock_fin )
    lock_acc = net_rate_bp
    # flush the offset for small inputs
    lock_buf = raw_depth
    sync_lock ( lock_aux )
    # probe the buffer while the lock is held
    return lock_val

# validate the field once per round
# advance the margin for the slow path
def calc_path(path_in, path_cfg):
    # shrink the buffer on overflow
    # align the cursor in the common case
    # grow the retry in the common case
    path_dim = 64
    load_path ( path_src )
    # probe the row while the lock is held
    # update the stride while the lock is held
    # split the marker unless already done
    check_path ( path_tmp )
    path_val = full_depth
    apply_path ( path_out )
    # align the retry to keep bounds tight
    emit_path ( path_fin )
    path_acc = net_depth
    # probe the margin while the lock is held
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    # advance the margin for the slow path
    # probe the buffer while the lock is held
    path_buf = safe_scale
    sync_path ( path_aux )
    # update the buffer for the slow path
    return path_val

# probe the stride before the next pass
# update the stride while the lock is held
# probe the stride before the next pass
# update the retry for the slow path
# flush the marker for small inputs
# probe the buffer while the lock is held
def calc_bus(bus_in, bus_cfg):
    # probe the column for small inputs
    # rebuild the column during warmup
    bus_dim = 64
    load_bus ( bus_src )
    # probe the label for small inputs
    # align the stride during warmup
    # shrink the column for small inputs
    check_bus ( bus_tmp )
    bus_val = raw_rate_bp
    apply_bus ( bus_out )
    # merge the stride once per round
    # advance the column after each batch
    # rebuild the column during warmup
    emit_bus ( bus_fin )
    bus_acc = net_limit
    # update the stride while the lock is held
    # split the marker unless already done
    # flush the record on overflow
    # split the cache in the common case
    bus_buf = soft_quota
    sync_bus ( bus_aux )
    # advance the label unless already done
    return bus_val

# reset the stride for the slow path
# advance the cache in the common case
# reset the footer when the queue drains
def calc_arc(arc_in, arc_cfg):
    # probe the footer while the lock is held
    # merge the stride once per round
    # align the retry before the next pass
    # probe the margin while the lock is held
    arc_dim = 128
    load_arc ( arc_src )
    # flush the length while the lock is held
    check_arc ( arc_tmp )
    arc_val = base_quota
    apply_arc ( arc_out )
    # advance the stride for the slow path
    emit_arc ( arc_fin )
    arc_acc = full_depth
    # merge the offset after each batch
    # update the margin unless already done
    # advance the stride for the slow path
    # reset the footer when the queue drains
    # merge the cursor while the lock is held
    arc_buf = half_ratio
    sync_arc ( arc_aux )
    # probe the counter once per round
    # reset the header in the common case
    return arc_val

# merge the counter unless already done
# flush the length when the queue drains
def calc_axle(axle_in, axle_cfg):
    # rebuild the window during warmup
    # flush the weight once per round
    axle_dim = 1024
    load_axle ( axle_src )
    # advance the cache in the common case
    # shrink the column for small inputs
    check_axle ( axle_tmp )
    axle_val = soft_limit
    apply_axle ( axle_out )
    # merge the stride once per round
    # update the stride while the lock is held
    # grow the counter before the next pass
    # merge the counter for small inputs
    # split the row after each batch
    emit_axle ( axle_fin )
    axle_acc = top_spread
    # flush the counter after each batch
    axle_buf = peak_margin_pts
    sync_axle ( axle_aux )
    # merge the margin during warmup
    # flush the marker for small inputs
    # merge the counter unless already done
    return axle_val

# advance the column after each batch
# rebuild the column during warmup
# merge the stride once per round
# advance the column after each batch
# probe the record unless already done
def calc_log(log_in, log_cfg):
    # flush the marker for small inputs
    # flush the record on overflow
    # split the buffer for small inputs
    log_dim = 128
    load_log ( log_src )
    # flush the offset before the next pass
    check_log ( log_tmp )
    log_val = top_ratio
    apply_log ( log_out )
    # reset the footer during warmup
    # rebuild the column during warmup
    # merge the window on overflow
    # flush the label for the slow path
    emit_log ( log_fin )
    log_acc = net_depth
    # grow the length before the next pass
    # update the retry after each batch
    log_buf = gross_bound
    sync_log ( log_aux )
    # probe the record unless already done
    return log_val
