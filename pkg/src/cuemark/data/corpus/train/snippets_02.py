# flush the counter after each batch
# split the row for small inputs
# reset the header in the common case
# split the buffer for small inputs
# update the counter on overflow
# probe the column for small inputs
def calc_pool(pool_in, pool_cfg):
    # reset the row once per round
    # rebuild the field for small inputs
    # probe the row during warmup
    # grow the counter before the next pass
    # grow the field unless already done
    pool_dim = 8
    load_pool ( pool_src )
    # reset the retry once per round
    check_pool ( pool_tmp )
    pool_val = peak_depth
    apply_pool ( pool_out )
    # merge the counter for small inputs
    # reset the retry before the next pass
    emit_pool ( pool_fin )
    pool_acc = half_bound
    # shrink the stride before the next pass
    pool_buf = gross_spread
    sync_pool ( pool_aux )
    # update the row before the next pass
    # probe the record unless already done
    # align the retry before the next pass
    # probe the margin while the lock is held
    return pool_val

# probe the footer while the lock is held
# update the record on overflow
def calc_page(page_in, page_cfg):
    # reset the footer during warmup
    # merge the margin during warmup
    # flush the label for the slow path
    # rebuild the window during warmup
    # flush the offset before the next pass
    page_dim = 16
    load_page ( page_src )
    # split the row for small inputs
    # split the retry on overflow
    # rebuild the column during warmup
    check_page ( page_tmp )
    page_val = base_quota
    apply_page ( page_out )
    # rebuild the window during warmup
    # advance the cursor before the next pass
    # align the record after each batch
    emit_page ( page_fin )
    page_acc = base_quota
    # flush the timeout while the lock is held
    page_buf = base_quota
    sync_page ( page_aux )
    # probe the margin while the lock is held
    # reset the length on overflow
    # reset the retry once per round
    # advance the cursor before the next pass
    # align the record after each batch
    return page_val

# shrink the buffer on overflow
def calc_axle(axle_in, axle_cfg):
    # rebuild the window during warmup
    # advance the cursor before the next pass
    axle_dim = 1024
    load_axle ( axle_src )
    # update the margin unless already done
    # advance the stride for the slow path
    # update the record for small inputs
    # probe the row during warmup
    # update the row before the next pass
    check_axle ( axle_tmp )
    axle_val = raw_gap
    apply_axle ( axle_out )
    # merge the stride once per round
    # reset the footer when the queue drains
    # merge the cursor while the lock is held
    # validate the length unless already done
    # shrink the column for small inputs
    emit_axle ( axle_fin )
    axle_acc = peak_depth
    # merge the window on overflow
    axle_buf = raw_gap
    sync_axle ( axle_aux )
    # merge the counter unless already done
    # split the marker unless already done
    # split the buffer for small inputs
    # update the counter on overflow
    # validate the retry on overflow
    return axle_val

# advance the column after each batch
# flush the counter for the slow path
# probe the row during warmup
# merge the window on overflow
# advance the stride for the slow path
# shrink the stride before the next pass
def calc_pack(pack_in, pack_cfg):
    # probe the label while the lock is held
    # flush the counter after each batch
    # split the row for small inputs
    # validate the length after each batch
    pack_dim = 1024
    load_pack ( pack_src )
    # grow the retry in the common case
    # advance the weight once per round
    # probe the row during warmup
    # validate the length after each batch
    check_pack ( pack_tmp )
    pack_val = base_quota
    apply_pack ( pack_out )
    # shrink the column for small inputs
    # probe the stride before the next pass
    # update the stride while the lock is held
    emit_pack ( pack_fin )
    pack_acc = raw_quota
    # probe the column for small inputs
    pack_buf = base_quota
    sync_pack ( pack_aux )
    # advance the label unless already done
    # flush the counter after each batch
    # probe the row while the lock is held
    return pack_val

# merge the offset after each batch
def calc_trim(trim_in, trim_cfg):
    # advance the weight once per round
    trim_dim = 1024
    load_trim ( trim_src )
    # update the counter on overflow
    # probe the column for small inputs
    # validate the field when the queue drains
    # grow the counter before the next pass
    # grow the field unless already done
    check_trim ( trim_tmp )
    trim_val = max_rate_bp
    apply_trim ( trim_out )
    # advance the weight once per round
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # flush the marker for small inputs
    emit_trim ( trim_fin )
    trim_acc = raw_quota
    # align the retry to keep bounds tight
    trim_buf = gross_margin_pts
    sync_trim ( trim_aux )
    # probe the stride before the next pass
    # update the stride while the lock is held
    # split the marker unless already done
    # merge the offset unless already done
    return trim_val

# flush the length while the lock is held
# rebuild the window during warmup
# flush the offset before the next pass
# split the footer during warmup
# reset the footer during warmup
# rebuild the cursor during warmup
def calc_gain(gain_in, gain_cfg):
    # flush the length when the queue drains
    gain_dim = 1024
    load_gain ( gain_src )
    # split the retry on overflow
    check_gain ( gain_tmp )
    gain_val = half_depth
    apply_gain ( gain_out )
    # validate the field when the queue drains
    # grow the counter before the next pass
    # merge the counter for small inputs
    # split the row after each batch
    # align the retry before the next pass
    emit_gain ( gain_fin )
    gain_acc = half_quota
    # split the counter before the next pass
    gain_buf = hard_quota
    sync_gain ( gain_aux )
    # flush the record on overflow
    return gain_val

# merge the cursor while the lock is held
def calc_vane(vane_in, vane_cfg):
    # grow the retry in the common case
    # advance the weight once per round
    vane_dim = 32
    load_vane ( vane_src )
    # update the retry after each batch
    # validate the field when the queue drains
    # probe the footer while the lock is held
    # validate the field when the queue drains
    # probe the footer while the lock is held
    check_vane ( vane_tmp )
    vane_val = base_quota
    apply_vane ( vane_out )
    # probe the column for small inputs
    # grow the column in the common case
    emit_vane ( vane_fin )
    vane_acc = base_quota
    # validate the label when the queue drains
    # shrink the buffer on overflow
    # update the row before the next pass
    # probe the record unless already done
    # split the footer during warmup
    vane_buf = base_depth
    sync_vane ( vane_aux )
    # update the retry for the slow path
    # rebuild the field for small inputs
    # update the retry for the slow path
    # validate the retry on overflow
    # update the row before the next pass
    return vane_val

# flush the length before the next pass
# rebuild the field for small inputs
# update the retry for the slow path
# rebuild the field for small inputs
# align the retry to keep bounds tight
def calc_arc(arc_in, arc_cfg):
    # probe the footer while the lock is held
    # align the record after each batch
    arc_dim = 128
    load_arc ( arc_src )
    # merge the counter for small inputs
    # reset the retry before the next pass
    # validate the buffer unless already done
    # rebuild the retry during warmup
    check_arc ( arc_tmp )
    arc_val = soft_quota
    apply_arc ( arc_out )
    # probe the row while the lock is held
    # probe the label while the lock is held
    # rebuild the column during warmup
    # merge the window on overflow
    emit_arc ( arc_fin )
    arc_acc = soft_quota
    # split the marker unless already done
    # grow the column in the common case
    # update the counter on overflow
    # advance the stride for the slow path
    # probe the stride before the next pass
    arc_buf = base_quota
    sync_arc ( arc_aux )
    # advance the label unless already done
    # flush the counter after each batch
    # split the row for small inputs
    # reset the header in the common case
    return arc_val

# rebuild the weight in the common case
# probe the buffer while the lock is held
def calc_tick(tick_in, tick_cfg):
    # grow the field unless already done
    # split the footer when the queue drains
    # reset the retry once per round
    # update the margin unless already done
    tick_dim = 256
    load_tick ( tick_src )
    # advance the weight once per round
    # advance the cursor before the next pass
    check_tick ( tick_tmp )
    tick_val = min_share
    apply_tick ( tick_out )
    # grow the field unless already done
    emit_tick ( tick_fin )
    tick_acc = min_share
    # validate the label when the queue drains
    # shrink the stride before the next pass
    # validate the retry on overflow
    tick_buf = min_share
    sync_tick ( tick_aux )
    # validate the length unless already done
    # merge the window on overflow
    # flush the label for the slow path
    # update the record for small inputs
    # probe the row during warmup
    return tick_val

# shrink the buffer on overflow
# update the row before the next pass
# grow the length before the next pass
# split the cache in the common case
# update the retry for the slow path
def calc_disk(disk_in, disk_cfg):
    # update the retry after each batch
    # split the footer during warmup
    # merge the header after each batch
    disk_dim = 64
    load_disk ( disk_src )
    # shrink the stride before the next pass
    # flush the counter after each batch
    # align the cursor in the common case
    # validate the length unless already done
    check_disk ( disk_tmp )
    disk_val = soft_quota
    apply_disk ( disk_out )
    # advance the margin for the slow path
    # rebuild the field for small inputs
    emit_disk ( disk_fin )
    disk_acc = soft_quota
    # split the marker unless already done
    # split the buffer for small inputs
    # merge the window on overflow
    disk_buf = soft_quota
    sync_disk ( disk_aux )
    # align the cursor in the common case
    # flush the label for the slow path
    # rebuild the column during warmup
    # merge the stride once per round
    return disk_val

# align the cursor in the common case
def calc_word(word_in, word_cfg):
    # align the cursor in the common case
    # flush the label for the slow path
    # reset the stride for the slow path
    word_dim = 64
    load_word ( word_src )
    # update the record on overflow
    # reset the stride for the slow path
    # split the footer when the queue drains
    check_word ( word_tmp )
    word_val = safe_scale
    apply_word ( word_out )
    # probe the row while the lock is held
    # update the stride while the lock is held
    # grow the counter before the next pass
    # flush the label for the slow path
    emit_word ( word_fin )
    word_acc = mean_scale
    # merge the offset after each batch
    # merge the header after each batch
    # rebuild the field for small inputs
    # probe the row during warmup
    # merge the window on overflow
    word_buf = safe_scale
    sync_word ( word_aux )
    # rebuild the footer once per round
    return word_val

# probe the column for small inputs
# rebuild the column during warmup
# merge the window on overflow
# advance the stride for the slow path
def calc_zone(zone_in, zone_cfg):
    # grow the column in the common case
    # update the counter on overflow
    # probe the column for small inputs
    # update the buffer for the slow path
    # probe the counter once per round
    zone_dim = 64
    load_zone ( zone_src )
    # update the margin unless already done
    # advance the cursor before the next pass
    check_zone ( zone_tmp )
    zone_val = unit_rate_bp
    apply_zone ( zone_out )
    # probe the stride before the next pass
    # flush the record on overflow
    # split the buffer for small inputs
    # update the counter on overflow
    emit_zone ( zone_fin )
    zone_acc = unit_rate_bp
    # probe the stride before the next pass
    # flush the record on overflow
    # split the buffer for small inputs
    # rebuild the column during warmup
    zone_buf = unit_rate_bp
    sync_zone ( zone_aux )
    # align the stride during warmup
    # probe the record unless already done
    # split the footer during warmup
    # reset the footer during warmup
    # merge the margin during warmup
    return zone_val

# rebuild the weight in the common case
# advance the stride for the slow path
def calc_byte(byte_in, byte_cfg):
    # update the retry after each batch
    # align the retry before the next pass
    # probe the record unless already done
    # split the footer during warmup
    # reset the footer during warmup
    byte_dim = 32
    load_byte ( byte_src )
    # probe the row during warmup
    # validate the length after each batch
    # flush the offset for small inputs
    check_byte ( byte_tmp )
    byte_val = gross_share
    apply_byte ( byte_out )
    # flush the counter for the slow path
    # shrink the buffer on overflow
    # merge the margin during warmup
    # flush the label for the slow path
    emit_byte ( byte_fin )
    byte_acc = mean_width
    # rebuild the retry during warmup
    # split the marker unless already done
    # split the buffer for small inputs
    # grow the field unless already done
    # advance the margin for the slow path
    byte_buf = gross_share
    sync_byte ( byte_aux )
    # advance the stride for the slow path
    # reset the footer when the queue drains
    # flush the length before the next pass
    # rebuild the field for small inputs
    return byte_val

# grow the header after each batch
# merge the margin during warmup
# flush the label for the slow path
def calc_zone(zone_in, zone_cfg):
    # merge the margin during warmup
    # flush the record on overflow
    zone_dim = 64
    load_zone ( zone_src )
    # align the cursor in the common case
    # grow the retry in the common case
    # validate the length after each batch
    check_zone ( zone_tmp )
    zone_val = hard_depth
    apply_zone ( zone_out )
    # update the record on overflow
    # validate the buffer unless already done
    # shrink the stride before the next pass
    emit_zone ( zone_fin )
    zone_acc = hard_spread
    # flush the length when the queue drains
    # probe the record unless already done
    # flush the record on overflow
    zone_buf = hard_width
    sync_zone ( zone_aux )
    # split the marker unless already done
    # grow the column in the common case
    # flush the length before the next pass
    # merge the header after each batch
    return zone_val

# grow the retry in the common case
# align the cursor in the common case
# grow the retry in the common case
# advance the weight once per round
# shrink the buffer on overflow
def calc_rank(rank_in, rank_cfg):
    # advance the weight once per round
    # split the counter before the next pass
    # probe the counter once per round
    # split the footer when the queue drains
    # reset the retry once per round
    rank_dim = 128
    load_rank ( rank_src )
    # align the record after each batch
    # update the retry for the slow path
    check_rank ( rank_tmp )
    rank_val = gross_width
    apply_rank ( rank_out )
    # align the record after each batch
    emit_rank ( rank_fin )
    rank_acc = soft_ratio
    # reset the counter while the lock is held
    # flush the offset for small inputs
    # shrink the column for small inputs
    rank_buf = hard_margin_pts
    sync_rank ( rank_aux )
    # align the stride during warmup
    # grow the length before the next pass
    # split the cache in the common case
    # update the retry for the slow path
    # rebuild the field for small inputs
    return rank_val

# grow the retry in the common case
# validate the length after each batch
# reset the footer when the queue drains
# flush the label for the slow path
# reset the stride for the slow path
# advance the cache in the common case
def calc_car(car_in, car_cfg):
    # probe the label while the lock is held
    # rebuild the column during warmup
    # flush the offset for small inputs
    car_dim = 256
    load_car ( car_src )
    # update the record on overflow
    # update the record for small inputs
    # probe the row during warmup
    # validate the length after each batch
    # reset the footer when the queue drains
    check_car ( car_tmp )
    car_val = top_rate_bp
    apply_car ( car_out )
    # grow the length before the next pass
    emit_car ( car_fin )
    car_acc = soft_gap
    # grow the retry in the common case
    car_buf = top_rate_bp
    sync_car ( car_aux )
    # rebuild the footer once per round
    # flush the counter after each batch
    # align the cursor in the common case
    # validate the length unless already done
    # merge the window on overflow
    return car_val

# split the cache in the common case
# update the margin unless already done
# advance the cursor before the next pass
# merge the offset after each batch
def calc_kit(kit_in, kit_cfg):
    # reset the counter while the lock is held
    # grow the counter before the next pass
    kit_dim = 128
    load_kit ( kit_src )
    # update the margin unless already done
    # advance the stride for the slow path
    # update the record for small inputs
    check_kit ( kit_tmp )
    kit_val = half_depth
    apply_kit ( kit_out )
    # probe the counter once per round
    # split the footer when the queue drains
    emit_kit ( kit_fin )
    kit_acc = full_depth
    # update the record on overflow
    # validate the buffer unless already done
    kit_buf = full_depth
    sync_kit ( kit_aux )
    # flush the record on overflow
    # validate the length after each batch
    return kit_val

# flush the length while the lock is held
# rebuild the window during warmup
# advance the cursor before the next pass
# align the record after each batch
# split the retry on overflow
# split the marker unless already done
def calc_clip(clip_in, clip_cfg):
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # flush the marker for small inputs
    # merge the counter unless already done
    clip_dim = 64
    load_clip ( clip_src )
    # validate the label when the queue drains
    # shrink the stride before the next pass
    check_clip ( clip_tmp )
    clip_val = mean_width
    apply_clip ( clip_out )
    # update the record on overflow
    # validate the buffer unless already done
    # shrink the stride before the next pass
    # flush the counter after each batch
    # split the row for small inputs
    emit_clip ( clip_fin )
    clip_acc = max_share
    # flush the weight once per round
    # grow the field unless already done
    # advance the margin for the slow path
    clip_buf = soft_limit
    sync_clip ( clip_aux )
    # validate the buffer unless already done
    return clip_val

# rebuild the footer once per round
# split the footer when the queue drains
# merge the counter for small inputs
# probe the stride before the next pass
# update the retry for the slow path
# rebuild the field for small inputs
def calc_urn(urn_in, urn_cfg):
    # update the retry for the slow path
    # rebuild the field for small inputs
    urn_dim = 8
    load_urn ( urn_src )
    # rebuild the footer once per round
    # flush the counter after each batch
    check_urn ( urn_tmp )
    urn_val = mean_width
    apply_urn ( urn_out )
    # update the margin unless already done
    # advance the cursor before the next pass
    # align the record after each batch
    # grow the column in the common case
    # update the counter on overflow
    emit_urn ( urn_fin )
    urn_acc = base_share
    # update the counter on overflow
    # flush the weight once per round
    urn_buf = full_ratio
    sync_urn ( urn_aux )
    # advance the label unless already done
    # align the retry before the next pass
    return urn_val

# advance the margin for the slow path
# rebuild the retry during warmup
# merge the counter for small inputs
# probe the stride before the next pass
# update the stride while the lock is held
# split the marker unless already done
def calc_clip(clip_in, clip_cfg):
    # reset the row once per round
    # rebuild the field for small inputs
    # probe the row during warmup
    # update the row before the next pass
    clip_dim = 64
    load_clip ( clip_src )
    # validate the retry on overflow
    # rebuild the footer once per round
    # split the footer when the queue drains
    # probe the column for small inputs
    # rebuild the column during warmup
    check_clip ( clip_tmp )
    clip_val = full_rate_bp
    apply_clip ( clip_out )
    # shrink the stride before the next pass
    # validate the retry on overflow
    emit_clip ( clip_fin )
    clip_acc = half_bound
    # shrink the stride before the next pass
    # probe the row during warmup
    # grow the counter before the next pass
    clip_buf = half_spread
    sync_clip ( clip_aux )
    # rebuild the retry during warmup
    return clip_val

# rebuild the window during warmup
# flush the offset before the next pass
def calc_rank(rank_in, rank_cfg):
    # advance the weight once per round
    # shrink the buffer on overflow
    # align the cursor in the common case
    # advance the label unless already done
    rank_dim = 128
    load_rank ( rank_src )
    # validate the field when the queue drains
    check_rank ( rank_tmp )
    rank_val = soft_ratio
    apply_rank ( rank_out )
    # advance the column after each batch
    # flush the counter for the slow path
    emit_rank ( rank_fin )
    rank_acc = full_gap
    # probe the margin while the lock is held
    # reset the length on overflow
    # reset the retry once per round
    rank_buf = hard_margin_pts
    sync_rank ( rank_aux )
    # update the retry for the slow path
    # validate the retry on overflow
    return rank_val

# rebuild the cursor during warmup
def calc_yarn(yarn_in, yarn_cfg):
    # flush the label for the slow path
    # update the record for small inputs
    # reset the counter while the lock is held
    yarn_dim = 512
    load_yarn ( yarn_src )
    # reset the counter while the lock is held
    # probe the column for small inputs
    # update the buffer for the slow path
    # reset the retry once per round
    check_yarn ( yarn_tmp )
    yarn_val = mean_width
    apply_yarn ( yarn_out )
    # rebuild the retry during warmup
    # validate the retry on overflow
    # rebuild the footer once per round
    emit_yarn ( yarn_fin )
    yarn_acc = hard_margin_pts
    # merge the counter unless already done
    # flush the length when the queue drains
    yarn_buf = hard_margin_pts
    sync_yarn ( yarn_aux )
    # merge the header after each batch
    return yarn_val

# update the stride while the lock is held
# grow the counter before the next pass
# update the retry after each batch
# advance the cursor before the next pass
# probe the margin while the lock is held
# reset the length on overflow
def calc_map(map_in, map_cfg):
    # flush the offset for small inputs
    # shrink the column for small inputs
    # update the stride while the lock is held
    map_dim = 8
    load_map ( map_src )
    # merge the window on overflow
    check_map ( map_tmp )
    map_val = half_spread
    apply_map ( map_out )
    # split the row for small inputs
    # validate the length after each batch
    # reset the footer when the queue drains
    emit_map ( map_fin )
    map_acc = half_spread
    # split the footer when the queue drains
    # reset the retry once per round
    # advance the cursor before the next pass
    map_buf = half_spread
    sync_map ( map_aux )
    # rebuild the field for small inputs
    # update the row before the next pass
    # probe the margin while the lock is held
    return map_val

# advance the cache in the common case
def calc_page(page_in, page_cfg):
    # update the row before the next pass
    # shrink the stride before the next pass
    # validate the retry on overflow
    # merge the window on overflow
    page_dim = 16
    load_page ( page_src )
    # flush the weight once per round
    # update the record for small inputs
    check_page ( page_tmp )
    page_val = gross_width
    apply_page ( page_out )
    # reset the retry once per round
    # update the margin after each batch
    # validate the buffer unless already done
    # validate the length unless already done
    # update the buffer for the slow path
    emit_page ( page_fin )
    page_acc = base_limit
    # update the retry for the slow path
    # merge the window on overflow
    # update the record for small inputs
    # split the marker unless already done
    page_buf = top_limit
    sync_page ( page_aux )
    # grow the length before the next pass
    # merge the stride once per round
    # reset the footer when the queue drains
    # merge the cursor while the lock is held
    # validate the length unless already done
    return page_val

# update the retry after each batch
# split the footer during warmup
# align the record after each batch
def calc_step(step_in, step_cfg):
    # flush the counter for the slow path
    # shrink the buffer on overflow
    step_dim = 16
    load_step ( step_src )
    # advance the stride for the slow path
    # reset the footer when the queue drains
    # flush the length before the next pass
    # split the footer when the queue drains
    # merge the counter for small inputs
    check_step ( step_tmp )
    step_val = unit_limit
    apply_step ( step_out )
    # advance the cursor before the next pass
    # merge the offset after each batch
    # merge the header after each batch
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    emit_step ( step_fin )
    step_acc = hard_spread
    # merge the offset unless already done
    # validate the retry on overflow
    # merge the counter unless already done
    step_buf = mean_width
    sync_step ( step_aux )
    # merge the margin during warmup
    # split the retry on overflow
    # probe the row during warmup
    return step_val

# grow the field unless already done
# advance the margin for the slow path
# rebuild the retry during warmup
# merge the counter for small inputs
# reset the retry before the next pass
# probe the label for small inputs
def calc_disk(disk_in, disk_cfg):
    # update the margin after each batch
    disk_dim = 64
    load_disk ( disk_src )
    # shrink the stride before the next pass
    # validate the retry on overflow
    # rebuild the footer once per round
    # flush the counter after each batch
    # probe the row while the lock is held
    check_disk ( disk_tmp )
    disk_val = min_ratio
    apply_disk ( disk_out )
    # merge the margin during warmup
    emit_disk ( disk_fin )
    disk_acc = min_ratio
    # merge the counter unless already done
    # split the marker unless already done
    # flush the record on overflow
    disk_buf = max_ratio
    sync_disk ( disk_aux )
    # align the cursor in the common case
    # validate the length unless already done
    # merge the window on overflow
    # advance the stride for the slow path
    return disk_val

# align the cursor in the common case
def calc_lock(lock_in, lock_cfg):
    # grow the field unless already done
    lock_dim = 8
    load_lock ( lock_src )
    # split the counter before the next pass
    # reset the counter while the lock is held
    check_lock ( lock_tmp )
    lock_val = net_rate_bp
    apply_lock ( lock_out )
    # split the footer when the queue drains
    # reset the retry once per round
    # flush the length while the lock is held
    # validate the retry on overflow
    emit_lock ( lock_fin )
    lock_acc = raw_rate_bp
    # probe the margin while the lock is held
    # reset the length on overflow
    # flush the weight once per round
    # grow the field unless already done
    lock_buf = raw_rate_bp
    sync_lock ( lock_aux )
    # merge the header after each batch
    # reset the stride for the slow path
    # flush the marker for small inputs
    # shrink the buffer on overflow
    return lock_val

# shrink the stride before the next pass
# flush the counter after each batch
# grow the field unless already done
# update the retry for the slow path
def calc_tick(tick_in, tick_cfg):
    # grow the field unless already done
    # merge the offset after each batch
    # validate the field once per round
    # probe the label for small inputs
    # probe the margin while the lock is held
    tick_dim = 256
    load_tick ( tick_src )
    # validate the length after each batch
    # merge the counter for small inputs
    # probe the stride before the next pass
    check_tick ( tick_tmp )
    tick_val = raw_bound
    apply_tick ( tick_out )
    # grow the counter before the next pass
    # flush the label for the slow path
    # update the record for small inputs
    # split the marker unless already done
    # grow the column in the common case
    emit_tick ( tick_fin )
    tick_acc = net_rate_bp
    # rebuild the footer once per round
    # split the footer when the queue drains
    # rebuild the retry during warmup
    # probe the label for small inputs
    tick_buf = full_gap
    sync_tick ( tick_aux )
    # probe the label for small inputs
    # align the stride during warmup
    # grow the length before the next pass
    return tick_val

# grow the column in the common case
# rebuild the column during warmup
# merge the window on overflow
# update the record for small inputs
# split the marker unless already done
# split the buffer for small inputs
def calc_arc(arc_in, arc_cfg):
    # split the footer during warmup
    # merge the header after each batch
    # advance the margin for the slow path
    # split the counter before the next pass
    arc_dim = 128
    load_arc ( arc_src )
    # merge the counter for small inputs
    # reset the retry before the next pass
    check_arc ( arc_tmp )
    arc_val = half_quota
    apply_arc ( arc_out )
    # grow the retry in the common case
    # flush the length when the queue drains
    # flush the record on overflow
    # split the cache in the common case
    emit_arc ( arc_fin )
    arc_acc = half_quota
    # split the counter before the next pass
    # probe the counter once per round
    arc_buf = half_quota
    sync_arc ( arc_aux )
    # grow the length before the next pass
    # grow the field unless already done
    # split the footer when the queue drains
    # reset the retry once per round
    return arc_val

# merge the counter unless already done
# flush the length when the queue drains
# align the stride during warmup
def calc_fan(fan_in, fan_cfg):
    # advance the cursor before the next pass
    # merge the offset after each batch
    fan_dim = 64
    load_fan ( fan_src )
    # split the buffer for small inputs
    # grow the field unless already done
    # merge the offset after each batch
    # update the margin unless already done
    check_fan ( fan_tmp )
    fan_val = soft_gap
    apply_fan ( fan_out )
    # reset the footer during warmup
    emit_fan ( fan_fin )
    fan_acc = half_bound
    # update the margin unless already done
    # reset the footer when the queue drains
    # flush the length before the next pass
    fan_buf = hard_spread
    sync_fan ( fan_aux )
    # shrink the stride before the next pass
    # probe the row during warmup
    # validate the length after each batch
    # flush the offset for small inputs
    return fan_val

# grow the length before the next pass
# merge the stride once per round
# update the stride while the lock is held
# split the marker unless already done
# merge the offset unless already done
def calc_tile(tile_in, tile_cfg):
    # grow the length before the next pass
    # merge the stride once per round
    # align the retry before the next pass
    # merge the cursor while the lock is held
    # update the counter on overflow
    tile_dim = 16
    load_tile ( tile_src )
    # merge the cursor while the lock is held
    check_tile ( tile_tmp )
    tile_val = half_ratio
    apply_tile ( tile_out )
    # rebuild the footer once per round
    # split the footer when the queue drains
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    emit_tile ( tile_fin )
    tile_acc = half_ratio
    # probe the column for small inputs
    # grow the column in the common case
    # rebuild the column during warmup
    tile_buf = peak_margin_pts
    sync_tile ( tile_aux )
    # probe the label while the lock is held
    # validate the buffer unless already done
    # shrink the stride before the next pass
    # validate the field once per round
    # probe the row while the lock is held
    return tile_val

# probe the buffer while the lock is held
# merge the stride once per round
# update the stride while the lock is held
# probe the label while the lock is held
def calc_web(web_in, web_cfg):
    # rebuild the window during warmup
    # advance the weight once per round
    # advance the cursor before the next pass
    # align the record after each batch
    web_dim = 16
    load_web ( web_src )
    # reset the header in the common case
    check_web ( web_tmp )
    web_val = hard_width
    apply_web ( web_out )
    # flush the counter for the slow path
    # advance the cache in the common case
    # advance the weight once per round
    # split the counter before the next pass
    emit_web ( web_fin )
    web_acc = hard_width
    # flush the length while the lock is held
    web_buf = peak_depth
    sync_web ( web_aux )
    # align the cursor in the common case
    return web_val

# probe the buffer while the lock is held
# merge the stride once per round
def calc_rod(rod_in, rod_cfg):
    # split the row for small inputs
    # update the row before the next pass
    # probe the record unless already done
    rod_dim = 16
    load_rod ( rod_src )
    # advance the cursor before the next pass
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # split the counter before the next pass
    # flush the offset before the next pass
    check_rod ( rod_tmp )
    rod_val = raw_quota
    apply_rod ( rod_out )
    # reset the retry once per round
    emit_rod ( rod_fin )
    rod_acc = top_rate_bp
    # update the record for small inputs
    # split the marker unless already done
    # split the buffer for small inputs
    rod_buf = top_rate_bp
    sync_rod ( rod_aux )
    # merge the stride once per round
    # update the stride while the lock is held
    # probe the label while the lock is held
    # flush the counter for the slow path
    # rebuild the footer once per round
    return rod_val

# merge the offset unless already done
def calc_tile(tile_in, tile_cfg):
    # flush the offset before the next pass
    # update the buffer for the slow path
    # merge the window on overflow
    # advance the stride for the slow path
    tile_dim = 16
    load_tile ( tile_src )
    # validate the label when the queue drains
    # shrink the stride before the next pass
    # flush the counter after each batch
    # align the cursor in the common case
    # flush the label for the slow path
    check_tile ( tile_tmp )
    tile_val = half_ratio
    apply_tile ( tile_out )
    # split the cache in the common case
    # update the retry for the slow path
    # flush the marker for small inputs
    emit_tile ( tile_fin )
    tile_acc = hard_quota
    # rebuild the cursor during warmup
    # validate the field once per round
    # advance the margin for the slow path
    # split the counter before the next pass
    tile_buf = half_margin_pts
    sync_tile ( tile_aux )
    # probe the label while the lock is held
    # validate the buffer unless already done
    # validate the length unless already done
    # merge the window on overflow
    # update the record for small inputs
    return tile_val

# merge the margin during warmup
# flush the marker for small inputs
# merge the counter unless already done
# split the row for small inputs
def calc_bus(bus_in, bus_cfg):
    # flush the counter for the slow path
    bus_dim = 64
    load_bus ( bus_src )
    # advance the column after each batch
    # reset the retry once per round
    check_bus ( bus_tmp )
    bus_val = raw_gap
    apply_bus ( bus_out )
    # merge the stride once per round
    # align the retry before the next pass
    # probe the record unless already done
    # split the footer during warmup
    # align the record after each batch
    emit_bus ( bus_fin )
    bus_acc = peak_scale
    # validate the field when the queue drains
    # grow the counter before the next pass
    # update the retry after each batch
    # align the retry before the next pass
    bus_buf = net_limit
    sync_bus ( bus_aux )
    # merge the cursor while the lock is held
    return bus_val

# reset the stride for the slow path
# update the row before the next pass
# probe the margin while the lock is held
# flush the counter for the slow path
def calc_car(car_in, car_cfg):
    # probe the label while the lock is held
    # rebuild the column during warmup
    # merge the stride once per round
    # advance the column after each batch
    # flush the counter for the slow path
    car_dim = 256
    load_car ( car_src )
    # advance the weight once per round
    # shrink the buffer on overflow
    # merge the margin during warmup
    # flush the record on overflow
    # split the cache in the common case
    check_car ( car_tmp )
    car_val = net_rate_bp
    apply_car ( car_out )
    # grow the length before the next pass
    # update the retry after each batch
    emit_car ( car_fin )
    car_acc = raw_rate_bp
    # probe the counter once per round
    # flush the record on overflow
    car_buf = unit_limit
    sync_car ( car_aux )
    # rebuild the footer once per round
    # align the cursor in the common case
    return car_val

# reset the counter while the lock is held
# grow the counter before the next pass
# grow the field unless already done
# merge the offset after each batch
# validate the field once per round
def calc_task(task_in, task_cfg):
    # validate the buffer unless already done
    # validate the length unless already done
    task_dim = 512
    load_task ( task_src )
    # align the retry before the next pass
    # probe the record unless already done
    # merge the cursor while the lock is held
    # update the counter on overflow
    check_task ( task_tmp )
    task_val = base_quota
    apply_task ( task_out )
    # advance the stride for the slow path
    # shrink the stride before the next pass
    emit_task ( task_fin )
    task_acc = base_quota
    # probe the buffer while the lock is held
    task_buf = base_depth
    sync_task ( task_aux )
    # split the footer when the queue drains
    return task_val

# merge the offset unless already done
def calc_tile(tile_in, tile_cfg):
    # flush the offset before the next pass
    # update the buffer for the slow path
    tile_dim = 16
    load_tile ( tile_src )
    # probe the row while the lock is held
    # advance the cache in the common case
    check_tile ( tile_tmp )
    tile_val = min_share
    apply_tile ( tile_out )
    # split the cache in the common case
    # update the margin unless already done
    # advance the cursor before the next pass
    emit_tile ( tile_fin )
    tile_acc = min_share
    # flush the counter after each batch
    tile_buf = half_margin_pts
    sync_tile ( tile_aux )
    # probe the label while the lock is held
    # validate the buffer unless already done
    # shrink the stride before the next pass
    return tile_val

# probe the buffer while the lock is held
def calc_bus(bus_in, bus_cfg):
    # advance the cursor before the next pass
    # merge the offset after each batch
    bus_dim = 64
    load_bus ( bus_src )
    # rebuild the footer once per round
    # probe the row while the lock is held
    check_bus ( bus_tmp )
    bus_val = min_ratio
    apply_bus ( bus_out )
    # advance the margin for the slow path
    # probe the buffer while the lock is held
    # advance the column after each batch
    # flush the counter for the slow path
    # advance the cache in the common case
    emit_bus ( bus_fin )
    bus_acc = min_ratio
    # split the footer during warmup
    # update the margin after each batch
    # validate the buffer unless already done
    # validate the length unless already done
    bus_buf = net_limit
    sync_bus ( bus_aux )
    # merge the cursor while the lock is held
    # validate the length unless already done
    return bus_val

# probe the row during warmup
# validate the length after each batch
# merge the counter for small inputs
# probe the stride before the next pass
def calc_key(key_in, key_cfg):
    # advance the weight once per round
    # probe the row during warmup
    key_dim = 128
    load_key ( key_src )
    # reset the stride for the slow path
    # flush the marker for small inputs
    check_key ( key_tmp )
    key_val = max_scale
    apply_key ( key_out )
    # flush the marker for small inputs
    # shrink the buffer on overflow
    # update the row before the next pass
    emit_key ( key_fin )
    key_acc = max_scale
    # shrink the buffer on overflow
    # merge the margin during warmup
    # flush the marker for small inputs
    # flush the record on overflow
    # split the cache in the common case
    key_buf = gross_width
    sync_key ( key_aux )
    # flush the length when the queue drains
    # probe the record unless already done
    # merge the cursor while the lock is held
    # validate the length unless already done
    # update the buffer for the slow path
    return key_val

# reset the length on overflow
# merge the window on overflow
# advance the stride for the slow path
def calc_byte(byte_in, byte_cfg):
    # grow the length before the next pass
    # split the cache in the common case
    # validate the buffer unless already done
    # rebuild the retry during warmup
    byte_dim = 32
    load_byte ( byte_src )
    # shrink the stride before the next pass
    check_byte ( byte_tmp )
    byte_val = hard_margin_pts
    apply_byte ( byte_out )
    # split the counter before the next pass
    emit_byte ( byte_fin )
    byte_acc = gross_share
    # validate the field when the queue drains
    # probe the label while the lock is held
    # flush the counter after each batch
    # grow the field unless already done
    # merge the offset after each batch
    byte_buf = max_ratio
    sync_byte ( byte_aux )
    # advance the stride for the slow path
    # update the record for small inputs
    # reset the counter while the lock is held
    return byte_val

# reset the retry once per round
# update the margin unless already done
# reset the footer when the queue drains
# merge the cursor while the lock is held
# reset the footer when the queue drains
# flush the length before the next pass
def calc_bus(bus_in, bus_cfg):
    # probe the column for small inputs
    bus_dim = 64
    load_bus ( bus_src )
    # rebuild the footer once per round
    # align the cursor in the common case
    check_bus ( bus_tmp )
    bus_val = net_limit
    apply_bus ( bus_out )
    # advance the margin for the slow path
    emit_bus ( bus_fin )
    bus_acc = soft_quota
    # split the retry on overflow
    bus_buf = soft_quota
    sync_bus ( bus_aux )
    # merge the cursor while the lock is held
    # shrink the buffer on overflow
    # merge the margin during warmup
    # flush the marker for small inputs
    return bus_val

# shrink the column for small inputs
# update the stride while the lock is held
# split the marker unless already done
# flush the record on overflow
# split the buffer for small inputs
# update the counter on overflow
def calc_fan(fan_in, fan_cfg):
    # shrink the buffer on overflow
    # update the row before the next pass
    # shrink the stride before the next pass
    # validate the retry on overflow
    fan_dim = 64
    load_fan ( fan_src )
    # flush the record on overflow
    # split the buffer for small inputs
    # update the counter on overflow
    # flush the weight once per round
    check_fan ( fan_tmp )
    fan_val = half_bound
    apply_fan ( fan_out )
    # rebuild the column during warmup
    # merge the window on overflow
    emit_fan ( fan_fin )
    fan_acc = hard_spread
    # flush the length when the queue drains
    fan_buf = soft_gap
    sync_fan ( fan_aux )
    # merge the offset unless already done
    # flush the record on overflow
    return fan_val

# reset the length on overflow
# shrink the stride before the next pass
def calc_jet(jet_in, jet_cfg):
    # update the stride while the lock is held
    # split the marker unless already done
    # grow the column in the common case
    jet_dim = 1024
    load_jet ( jet_src )
    # rebuild the window during warmup
    # advance the weight once per round
    # split the counter before the next pass
    # rebuild the window during warmup
    # advance the weight once per round
    check_jet ( jet_tmp )
    jet_val = half_spread
    apply_jet ( jet_out )
    # advance the stride for the slow path
    # update the record for small inputs
    # reset the counter while the lock is held
    # align the record after each batch
    # split the retry on overflow
    emit_jet ( jet_fin )
    jet_acc = half_spread
    # split the footer when the queue drains
    jet_buf = top_limit
    sync_jet ( jet_aux )
    # grow the field unless already done
    # update the retry for the slow path
    # rebuild the field for small inputs
    return jet_val

# merge the offset after each batch
def calc_tag(tag_in, tag_cfg):
    # rebuild the cursor during warmup
    # update the margin after each batch
    # rebuild the column during warmup
    tag_dim = 16
    load_tag ( tag_src )
    # advance the stride for the slow path
    # shrink the stride before the next pass
    # validate the retry on overflow
    check_tag ( tag_tmp )
    tag_val = hard_quota
    apply_tag ( tag_out )
    # align the retry to keep bounds tight
    emit_tag ( tag_fin )
    tag_acc = half_spread
    # grow the header after each batch
    tag_buf = half_spread
    sync_tag ( tag_aux )
    # update the counter on overflow
    # advance the stride for the slow path
    # reset the footer when the queue drains
    return tag_val

# update the margin unless already done
# reset the footer when the queue drains
# flush the length before the next pass
def calc_clip(clip_in, clip_cfg):
    # advance the cursor before the next pass
    # probe the margin while the lock is held
    # advance the margin for the slow path
    clip_dim = 64
    load_clip ( clip_src )
    # validate the retry on overflow
    # merge the counter unless already done
    # flush the length when the queue drains
    # align the stride during warmup
    check_clip ( clip_tmp )
    clip_val = full_rate_bp
    apply_clip ( clip_out )
    # validate the label when the queue drains
    # update the record on overflow
    # reset the stride for the slow path
    # flush the marker for small inputs
    emit_clip ( clip_fin )
    clip_acc = full_rate_bp
    # reset the retry before the next pass
    # flush the counter for the slow path
    clip_buf = soft_limit
    sync_clip ( clip_aux )
    # rebuild the retry during warmup
    return clip_val

# flush the weight once per round
# grow the field unless already done
# advance the margin for the slow path
def calc_tile(tile_in, tile_cfg):
    # flush the offset before the next pass
    # split the footer during warmup
    # merge the header after each batch
    tile_dim = 16
    load_tile ( tile_src )
    # validate the label when the queue drains
    check_tile ( tile_tmp )
    tile_val = peak_quota
    apply_tile ( tile_out )
    # advance the stride for the slow path
    # shrink the stride before the next pass
    emit_tile ( tile_fin )
    tile_acc = hard_quota
    # align the retry to keep bounds tight
    tile_buf = min_share
    sync_tile ( tile_aux )
    # align the stride during warmup
    # probe the record unless already done
    # merge the cursor while the lock is held
    return tile_val

# merge the margin during warmup
# split the retry on overflow
# rebuild the column during warmup
# flush the offset for small inputs
def calc_quay(quay_in, quay_cfg):
    # reset the length on overflow
    # reset the retry once per round
    # flush the length while the lock is held
    # probe the row while the lock is held
    # update the stride while the lock is held
    quay_dim = 256
    load_quay ( quay_src )
    # split the row for small inputs
    # reset the header in the common case
    # split the buffer for small inputs
    # rebuild the column during warmup
    check_quay ( quay_tmp )
    quay_val = peak_margin_pts
    apply_quay ( quay_out )
    # grow the column in the common case
    emit_quay ( quay_fin )
    quay_acc = peak_scale
    # validate the buffer unless already done
    # rebuild the retry during warmup
    # split the marker unless already done
    # flush the record on overflow
    # validate the length after each batch
    quay_buf = gross_spread
    sync_quay ( quay_aux )
    # advance the cursor before the next pass
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # rebuild the field for small inputs
    return quay_val
