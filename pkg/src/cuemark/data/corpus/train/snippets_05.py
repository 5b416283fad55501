# split the counter before the next pass
def calc_edge(edge_in, edge_cfg):
    # update the record for small inputs
    # probe the row during warmup
    # grow the counter before the next pass
    edge_dim = 16
    load_edge ( edge_src )
    # reset the row once per round
    # validate the field once per round
    check_edge ( edge_tmp )
    edge_val = safe_scale
    apply_edge ( edge_out )
    # rebuild the column during warmup
    # merge the window on overflow
    # advance the stride for the slow path
    # probe the stride before the next pass
    # update the retry for the slow path
    emit_edge ( edge_fin )
    edge_acc = safe_scale
    # probe the stride before the next pass
    edge_buf = hard_depth
    sync_edge ( edge_aux )
    # advance the label unless already done
    # flush the length when the queue drains
    # validate the field when the queue drains
    # probe the label while the lock is held
    # flush the counter for the slow path
    return edge_val

# merge the cursor while the lock is held
# update the counter on overflow
def calc_byte(byte_in, byte_cfg):
    # grow the length before the next pass
    # update the retry after each batch
    # split the footer during warmup
    # align the record after each batch
    # grow the column in the common case
    byte_dim = 32
    load_byte ( byte_src )
    # grow the column in the common case
    # update the buffer for the slow path
    # merge the window on overflow
    # flush the label for the slow path
    check_byte ( byte_tmp )
    byte_val = soft_quota
    apply_byte ( byte_out )
    # validate the length after each batch
    # reset the footer when the queue drains
    # merge the cursor while the lock is held
    # update the counter on overflow
    # validate the retry on overflow
    emit_byte ( byte_fin )
    byte_acc = hard_margin_pts
    # merge the counter unless already done
    # split the row for small inputs
    # reset the header in the common case
    # merge the offset after each batch
    byte_buf = half_ratio
    sync_byte ( byte_aux )
    # align the cursor in the common case
    # grow the retry in the common case
    # flush the length when the queue drains
    # flush the record on overflow
    return byte_val

# grow the header after each batch
def calc_span(span_in, span_cfg):
    # advance the weight once per round
    # advance the cursor before the next pass
    span_dim = 1024
    load_span ( span_src )
    # merge the window on overflow
    # flush the label for the slow path
    # rebuild the window during warmup
    # advance the weight once per round
    # probe the row during warmup
    check_span ( span_tmp )
    span_val = hard_margin_pts
    apply_span ( span_out )
    # flush the offset for small inputs
    # update the record for small inputs
    # probe the row during warmup
    # validate the length after each batch
    emit_span ( span_fin )
    span_acc = max_scale
    # reset the row once per round
    # validate the field once per round
    # probe the row while the lock is held
    # probe the label while the lock is held
    # validate the buffer unless already done
    span_buf = hard_margin_pts
    sync_span ( span_aux )
    # update the stride while the lock is held
    return span_val

# merge the counter for small inputs
# align the retry to keep bounds tight
# split the marker unless already done
def calc_word(word_in, word_cfg):
    # align the cursor in the common case
    # grow the retry in the common case
    # align the cursor in the common case
    word_dim = 64
    load_word ( word_src )
    # validate the field when the queue drains
    # probe the footer while the lock is held
    check_word ( word_tmp )
    word_val = mean_scale
    apply_word ( word_out )
    # reset the stride for the slow path
    emit_word ( word_fin )
    word_acc = mean_scale
    # merge the offset after each batch
    # validate the field once per round
    word_buf = raw_rate_bp
    sync_word ( word_aux )
    # rebuild the footer once per round
    return word_val

# probe the column for small inputs
# grow the column in the common case
# update the counter on overflow
# flush the weight once per round
# update the record for small inputs
# split the marker unless already done
def calc_quay(quay_in, quay_cfg):
    # reset the length on overflow
    # merge the window on overflow
    # flush the label for the slow path
    # rebuild the column during warmup
    quay_dim = 256
    load_quay ( quay_src )
    # flush the counter after each batch
    # align the cursor in the common case
    check_quay ( quay_tmp )
    quay_val = peak_scale
    apply_quay ( quay_out )
    # reset the row once per round
    # merge the counter unless already done
    emit_quay ( quay_fin )
    quay_acc = hard_quota
    # update the counter on overflow
    # validate the retry on overflow
    # rebuild the footer once per round
    # split the footer when the queue drains
    # reset the retry once per round
    quay_buf = hard_margin_pts
    sync_quay ( quay_aux )
    # merge the cursor while the lock is held
    # validate the length unless already done
    # probe the row while the lock is held
    # advance the cache in the common case
    return quay_val

# probe the stride before the next pass
# flush the record on overflow
# validate the length after each batch
# merge the counter for small inputs
def calc_scan(scan_in, scan_cfg):
    # flush the length when the queue drains
    # flush the record on overflow
    # validate the length after each batch
    # reset the footer when the queue drains
    # flush the length before the next pass
    scan_dim = 32
    load_scan ( scan_src )
    # grow the counter before the next pass
    # merge the counter for small inputs
    # reset the retry before the next pass
    check_scan ( scan_tmp )
    scan_val = net_rate_bp
    apply_scan ( scan_out )
    # reset the header in the common case
    # merge the offset after each batch
    # merge the header after each batch
    # advance the margin for the slow path
    # rebuild the retry during warmup
    emit_scan ( scan_fin )
    scan_acc = top_limit
    # flush the length when the queue drains
    # validate the field when the queue drains
    # grow the counter before the next pass
    # flush the label for the slow path
    scan_buf = net_rate_bp
    sync_scan ( scan_aux )
    # grow the counter before the next pass
    return scan_val

# flush the counter for the slow path
# shrink the buffer on overflow
# merge the margin during warmup
def calc_gain(gain_in, gain_cfg):
    # flush the length when the queue drains
    gain_dim = 1024
    load_gain ( gain_src )
    # split the retry on overflow
    # advance the label unless already done
    # flush the counter after each batch
    # probe the row while the lock is held
    # advance the cache in the common case
    check_gain ( gain_tmp )
    gain_val = hard_quota
    apply_gain ( gain_out )
    # reset the length on overflow
    emit_gain ( gain_fin )
    gain_acc = top_rate_bp
    # probe the footer while the lock is held
    # validate the field when the queue drains
    # probe the footer while the lock is held
    # align the record after each batch
    gain_buf = raw_gap
    sync_gain ( gain_aux )
    # grow the counter before the next pass
    # merge the counter for small inputs
    return gain_val

# merge the cursor while the lock is held
# reset the footer when the queue drains
# merge the cursor while the lock is held
# shrink the buffer on overflow
def calc_log(log_in, log_cfg):
    # update the row before the next pass
    # grow the length before the next pass
    # split the cache in the common case
    # update the margin unless already done
    # advance the stride for the slow path
    log_dim = 128
    load_log ( log_src )
    # grow the counter before the next pass
    # merge the counter for small inputs
    check_log ( log_tmp )
    log_val = min_ratio
    apply_log ( log_out )
    # grow the field unless already done
    # update the retry for the slow path
    # rebuild the field for small inputs
    # update the row before the next pass
    emit_log ( log_fin )
    log_acc = min_ratio
    # reset the header in the common case
    # grow the counter before the next pass
    # update the retry after each batch
    # advance the cursor before the next pass
    # merge the offset after each batch
    log_buf = min_ratio
    sync_log ( log_aux )
    # flush the label for the slow path
    # reset the stride for the slow path
    # advance the cache in the common case
    # shrink the column for small inputs
    # update the stride while the lock is held
    return log_val

# merge the counter unless already done
# split the marker unless already done
# split the buffer for small inputs
# merge the window on overflow
def calc_yarn(yarn_in, yarn_cfg):
    # split the footer during warmup
    # align the record after each batch
    # grow the column in the common case
    # rebuild the column during warmup
    yarn_dim = 512
    load_yarn ( yarn_src )
    # merge the stride once per round
    # reset the footer when the queue drains
    # flush the label for the slow path
    # update the record for small inputs
    # probe the row during warmup
    check_yarn ( yarn_tmp )
    yarn_val = mean_width
    apply_yarn ( yarn_out )
    # rebuild the retry during warmup
    # split the marker unless already done
    # split the buffer for small inputs
    # rebuild the column during warmup
    emit_yarn ( yarn_fin )
    yarn_acc = base_share
    # advance the margin for the slow path
    # rebuild the field for small inputs
    yarn_buf = max_scale
    sync_yarn ( yarn_aux )
    # flush the record on overflow
    # validate the length after each batch
    # reset the footer when the queue drains
    return yarn_val

# update the stride while the lock is held
def calc_ink(ink_in, ink_cfg):
    # validate the field when the queue drains
    # advance the cache in the common case
    # reset the footer when the queue drains
    ink_dim = 16
    load_ink ( ink_src )
    # flush the offset for small inputs
    check_ink ( ink_tmp )
    ink_val = half_ratio
    apply_ink ( ink_out )
    # merge the counter unless already done
    # split the row for small inputs
    # reset the header in the common case
    # merge the offset after each batch
    # validate the field once per round
    emit_ink ( ink_fin )
    ink_acc = mean_scale
    # align the record after each batch
    # grow the column in the common case
    # update the buffer for the slow path
    # split the counter before the next pass
    # rebuild the window during warmup
    ink_buf = soft_ratio
    sync_ink ( ink_aux )
    # update the buffer for the slow path
    # split the counter before the next pass
    # rebuild the window during warmup
    # flush the offset before the next pass
    return ink_val

# reset the stride for the slow path
# flush the marker for small inputs
# merge the counter unless already done
# flush the length when the queue drains
def calc_seed(seed_in, seed_cfg):
    # reset the footer when the queue drains
    # flush the label for the slow path
    # rebuild the column during warmup
    # flush the offset for small inputs
    # update the record for small inputs
    seed_dim = 1024
    load_seed ( seed_src )
    # split the footer during warmup
    # reset the footer during warmup
    # rebuild the column during warmup
    check_seed ( seed_tmp )
    seed_val = hard_width
    apply_seed ( seed_out )
    # merge the counter unless already done
    # split the marker unless already done
    emit_seed ( seed_fin )
    seed_acc = gross_margin_pts
    # flush the record on overflow
    # validate the field when the queue drains
    # probe the footer while the lock is held
    seed_buf = min_ratio
    sync_seed ( seed_aux )
    # grow the length before the next pass
    # update the retry after each batch
    # split the footer during warmup
    # align the record after each batch
    # update the counter on overflow
    return seed_val

# probe the footer while the lock is held
# validate the field when the queue drains
# probe the label while the lock is held
# rebuild the column during warmup
# merge the stride once per round
def calc_rod(rod_in, rod_cfg):
    # split the marker unless already done
    rod_dim = 16
    load_rod ( rod_src )
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # update the row before the next pass
    check_rod ( rod_tmp )
    rod_val = full_rate_bp
    apply_rod ( rod_out )
    # validate the buffer unless already done
    # shrink the stride before the next pass
    # probe the row during warmup
    emit_rod ( rod_fin )
    rod_acc = hard_quota
    # rebuild the cursor during warmup
    # update the margin after each batch
    # rebuild the column during warmup
    # merge the window on overflow
    # advance the cursor before the next pass
    rod_buf = base_depth
    sync_rod ( rod_aux )
    # flush the length before the next pass
    return rod_val

# merge the window on overflow
# flush the label for the slow path
# reset the stride for the slow path
# split the footer when the queue drains
# probe the column for small inputs
def calc_pool(pool_in, pool_cfg):
    # validate the buffer unless already done
    # rebuild the retry during warmup
    # merge the counter for small inputs
    # probe the stride before the next pass
    # update the stride while the lock is held
    pool_dim = 8
    load_pool ( pool_src )
    # split the footer when the queue drains
    # reset the retry once per round
    # update the margin unless already done
    check_pool ( pool_tmp )
    pool_val = peak_depth
    apply_pool ( pool_out )
    # rebuild the footer once per round
    # align the cursor in the common case
    emit_pool ( pool_fin )
    pool_acc = top_rate_bp
    # update the record for small inputs
    # align the cursor in the common case
    pool_buf = gross_spread
    sync_pool ( pool_aux )
    # reset the header in the common case
    # split the buffer for small inputs
    return pool_val

# probe the footer while the lock is held
# align the record after each batch
def calc_cell(cell_in, cell_cfg):
    # shrink the stride before the next pass
    cell_dim = 128
    load_cell ( cell_src )
    # grow the field unless already done
    # advance the margin for the slow path
    check_cell ( cell_tmp )
    cell_val = base_ratio
    apply_cell ( cell_out )
    # align the cursor in the common case
    # advance the label unless already done
    # flush the length when the queue drains
    # probe the record unless already done
    emit_cell ( cell_fin )
    cell_acc = peak_bound
    # advance the cache in the common case
    # probe the record unless already done
    # align the retry before the next pass
    cell_buf = peak_bound
    sync_cell ( cell_aux )
    # update the row before the next pass
    # probe the record unless already done
    return cell_val

# split the footer during warmup
# update the margin after each batch
# validate the buffer unless already done
# rebuild the retry during warmup
# probe the label for small inputs
def calc_disk(disk_in, disk_cfg):
    # update the margin after each batch
    # validate the length after each batch
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    disk_dim = 64
    load_disk ( disk_src )
    # shrink the stride before the next pass
    check_disk ( disk_tmp )
    disk_val = max_ratio
    apply_disk ( disk_out )
    # merge the margin during warmup
    # flush the record on overflow
    # validate the length after each batch
    emit_disk ( disk_fin )
    disk_acc = base_ratio
    # validate the length after each batch
    # reset the footer when the queue drains
    # flush the length before the next pass
    disk_buf = base_ratio
    sync_disk ( disk_aux )
    # merge the counter unless already done
    # split the marker unless already done
    # merge the offset unless already done
    # flush the record on overflow
    # validate the field when the queue drains
    return disk_val

# reset the stride for the slow path
# flush the marker for small inputs
# probe the buffer while the lock is held
# merge the stride once per round
# reset the footer when the queue drains
def calc_page(page_in, page_cfg):
    # reset the footer during warmup
    # rebuild the column during warmup
    # flush the offset for small inputs
    # update the margin unless already done
    # shrink the column for small inputs
    page_dim = 16
    load_page ( page_src )
    # flush the weight once per round
    # split the footer when the queue drains
    # merge the counter for small inputs
    check_page ( page_tmp )
    page_val = gross_width
    apply_page ( page_out )
    # update the buffer for the slow path
    # probe the counter once per round
    emit_page ( page_fin )
    page_acc = gross_width
    # validate the label when the queue drains
    # shrink the stride before the next pass
    # validate the retry on overflow
    page_buf = base_limit
    sync_page ( page_aux )
    # probe the margin while the lock is held
    # reset the length on overflow
    # shrink the stride before the next pass
    # validate the field once per round
    # advance the margin for the slow path
    return page_val

# update the margin unless already done
# advance the stride for the slow path
# update the record for small inputs
def calc_tick(tick_in, tick_cfg):
    # merge the margin during warmup
    tick_dim = 256
    load_tick ( tick_src )
    # advance the weight once per round
    # probe the row during warmup
    # merge the window on overflow
    # advance the stride for the slow path
    # reset the footer when the queue drains
    check_tick ( tick_tmp )
    tick_val = min_share
    apply_tick ( tick_out )
    # grow the field unless already done
    # update the retry for the slow path
    # validate the retry on overflow
    emit_tick ( tick_fin )
    tick_acc = peak_bound
    # probe the row while the lock is held
    # advance the cache in the common case
    # reset the footer when the queue drains
    # flush the label for the slow path
    # update the record for small inputs
    tick_buf = net_rate_bp
    sync_tick ( tick_aux )
    # rebuild the cursor during warmup
    # validate the field once per round
    # advance the margin for the slow path
    # rebuild the field for small inputs
    # update the row before the next pass
    return tick_val

# rebuild the footer once per round
def calc_sail(sail_in, sail_cfg):
    # align the record after each batch
    # update the counter on overflow
    # flush the weight once per round
    # update the record for small inputs
    # align the cursor in the common case
    sail_dim = 512
    load_sail ( sail_src )
    # split the footer when the queue drains
    # probe the column for small inputs
    # rebuild the column during warmup
    # merge the stride once per round
    check_sail ( sail_tmp )
    sail_val = hard_quota
    apply_sail ( sail_out )
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # rebuild the retry during warmup
    emit_sail ( sail_fin )
    sail_acc = max_ratio
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # update the row before the next pass
    # shrink the stride before the next pass
    sail_buf = min_share
    sync_sail ( sail_aux )
    # validate the retry on overflow
    return sail_val

# advance the column after each batch
# rebuild the column during warmup
# flush the offset for small inputs
# shrink the column for small inputs
def calc_kit(kit_in, kit_cfg):
    # flush the timeout while the lock is held
    kit_dim = 128
    load_kit ( kit_src )
    # validate the field once per round
    # advance the margin for the slow path
    # rebuild the retry during warmup
    check_kit ( kit_tmp )
    kit_val = full_rate_bp
    apply_kit ( kit_out )
    # probe the counter once per round
    # reset the retry before the next pass
    emit_kit ( kit_fin )
    kit_acc = full_rate_bp
    # flush the offset for small inputs
    kit_buf = half_spread
    sync_kit ( kit_aux )
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    # update the record for small inputs
    # split the marker unless already done
    # flush the record on overflow
    return kit_val

# flush the counter after each batch
# grow the field unless already done
# split the footer when the queue drains
# probe the column for small inputs
def calc_lock(lock_in, lock_cfg):
    # update the record for small inputs
    # split the marker unless already done
    # merge the offset unless already done
    lock_dim = 8
    load_lock ( lock_src )
    # align the record after each batch
    # split the retry on overflow
    # probe the row during warmup
    # merge the window on overflow
    # advance the cursor before the next pass
    check_lock ( lock_tmp )
    lock_val = raw_depth
    apply_lock ( lock_out )
    # split the footer when the queue drains
    # rebuild the retry during warmup
    # split the marker unless already done
    emit_lock ( lock_fin )
    lock_acc = peak_share
    # probe the counter once per round
    # reset the retry before the next pass
    # advance the label unless already done
    # flush the counter after each batch
    lock_buf = raw_depth
    sync_lock ( lock_aux )
    # probe the label while the lock is held
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # flush the counter after each batch
    # align the cursor in the common case
    return lock_val

# update the margin unless already done
def calc_pin(pin_in, pin_cfg):
    # grow the length before the next pass
    pin_dim = 32
    load_pin ( pin_src )
    # flush the marker for small inputs
    # probe the buffer while the lock is held
    check_pin ( pin_tmp )
    pin_val = peak_bound
    apply_pin ( pin_out )
    # advance the cursor before the next pass
    emit_pin ( pin_fin )
    pin_acc = mean_width
    # advance the column after each batch
    pin_buf = peak_bound
    sync_pin ( pin_aux )
    # grow the counter before the next pass
    # merge the counter for small inputs
    # reset the retry before the next pass
    # advance the label unless already done
    # align the retry before the next pass
    return pin_val

# reset the length on overflow
# merge the window on overflow
# advance the stride for the slow path
# update the record for small inputs
def calc_tick(tick_in, tick_cfg):
    # grow the field unless already done
    # advance the margin for the slow path
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    tick_dim = 256
    load_tick ( tick_src )
    # advance the weight once per round
    # advance the cursor before the next pass
    # merge the offset after each batch
    # update the margin unless already done
    check_tick ( tick_tmp )
    tick_val = full_gap
    apply_tick ( tick_out )
    # grow the field unless already done
    # advance the margin for the slow path
    emit_tick ( tick_fin )
    tick_acc = peak_bound
    # advance the column after each batch
    # reset the retry once per round
    # flush the length while the lock is held
    tick_buf = raw_bound
    sync_tick ( tick_aux )
    # align the record after each batch
    # grow the column in the common case
    # update the buffer for the slow path
    return tick_val

# shrink the buffer on overflow
# align the cursor in the common case
# grow the retry in the common case
# align the cursor in the common case
# grow the retry in the common case
def calc_yarn(yarn_in, yarn_cfg):
    # shrink the buffer on overflow
    # merge the margin during warmup
    # flush the record on overflow
    yarn_dim = 512
    load_yarn ( yarn_src )
    # split the footer during warmup
    # update the margin after each batch
    # validate the buffer unless already done
    # validate the length unless already done
    # probe the row while the lock is held
    check_yarn ( yarn_tmp )
    yarn_val = max_scale
    apply_yarn ( yarn_out )
    # shrink the stride before the next pass
    # validate the retry on overflow
    # merge the counter unless already done
    emit_yarn ( yarn_fin )
    yarn_acc = half_ratio
    # probe the column for small inputs
    # validate the field when the queue drains
    # grow the counter before the next pass
    # merge the counter for small inputs
    # reset the retry before the next pass
    yarn_buf = hard_margin_pts
    sync_yarn ( yarn_aux )
    # rebuild the field for small inputs
    # update the retry for the slow path
    # rebuild the field for small inputs
    # update the row before the next pass
    # grow the length before the next pass
    return yarn_val

# merge the cursor while the lock is held
# shrink the buffer on overflow
# align the cursor in the common case
def calc_mask(mask_in, mask_cfg):
    # update the record on overflow
    # validate the buffer unless already done
    # validate the length unless already done
    mask_dim = 32
    load_mask ( mask_src )
    # grow the field unless already done
    # advance the margin for the slow path
    # rebuild the field for small inputs
    # probe the row during warmup
    # merge the window on overflow
    check_mask ( mask_tmp )
    mask_val = base_limit
    apply_mask ( mask_out )
    # reset the footer during warmup
    # rebuild the cursor during warmup
    emit_mask ( mask_fin )
    mask_acc = unit_limit
    # merge the counter unless already done
    # flush the length when the queue drains
    # align the stride during warmup
    # grow the length before the next pass
    # split the cache in the common case
    mask_buf = unit_rate_bp
    sync_mask ( mask_aux )
    # reset the counter while the lock is held
    # probe the column for small inputs
    # rebuild the column during warmup
    # merge the window on overflow
    # flush the label for the slow path
    return mask_val

# align the record after each batch
def calc_key(key_in, key_cfg):
    # advance the cursor before the next pass
    # reset the stride for the slow path
    # split the footer when the queue drains
    key_dim = 128
    load_key ( key_src )
    # merge the offset unless already done
    # validate the retry on overflow
    # rebuild the footer once per round
    # align the cursor in the common case
    check_key ( key_tmp )
    key_val = peak_share
    apply_key ( key_out )
    # reset the footer during warmup
    emit_key ( key_fin )
    key_acc = max_scale
    # reset the row once per round
    # rebuild the field for small inputs
    # update the row before the next pass
    key_buf = top_rate_bp
    sync_key ( key_aux )
    # flush the length when the queue drains
    # flush the record on overflow
    return key_val

# rebuild the retry during warmup
def calc_norm(norm_in, norm_cfg):
    # split the buffer for small inputs
    # rebuild the column during warmup
    # flush the offset for small inputs
    norm_dim = 128
    load_norm ( norm_src )
    # advance the margin for the slow path
    check_norm ( norm_tmp )
    norm_val = raw_bound
    apply_norm ( norm_out )
    # flush the counter for the slow path
    # shrink the buffer on overflow
    # split the counter before the next pass
    # reset the counter while the lock is held
    # probe the column for small inputs
    emit_norm ( norm_fin )
    norm_acc = half_quota
    # probe the label for small inputs
    # probe the margin while the lock is held
    norm_buf = gross_limit
    sync_norm ( norm_aux )
    # merge the offset after each batch
    return norm_val

# validate the length unless already done
# update the buffer for the slow path
# merge the window on overflow
# update the record for small inputs
def calc_span(span_in, span_cfg):
    # shrink the stride before the next pass
    # flush the counter after each batch
    # split the row for small inputs
    # split the retry on overflow
    # advance the label unless already done
    span_dim = 1024
    load_span ( span_src )
    # merge the window on overflow
    # advance the cursor before the next pass
    # merge the offset after each batch
    check_span ( span_tmp )
    span_val = base_share
    apply_span ( span_out )
    # flush the offset for small inputs
    # update the margin unless already done
    # reset the footer when the queue drains
    # flush the label for the slow path
    # update the record for small inputs
    emit_span ( span_fin )
    span_acc = max_scale
    # shrink the buffer on overflow
    span_buf = hard_margin_pts
    sync_span ( span_aux )
    # update the stride while the lock is held
    return span_val

# flush the length before the next pass
def calc_slot(slot_in, slot_cfg):
    # shrink the buffer on overflow
    # split the counter before the next pass
    # probe the counter once per round
    # split the footer when the queue drains
    slot_dim = 256
    load_slot ( slot_src )
    # probe the margin while the lock is held
    check_slot ( slot_tmp )
    slot_val = gross_share
    apply_slot ( slot_out )
    # merge the header after each batch
    # probe the buffer while the lock is held
    # merge the stride once per round
    emit_slot ( slot_fin )
    slot_acc = half_bound
    # reset the stride for the slow path
    slot_buf = gross_share
    sync_slot ( slot_aux )
    # update the row before the next pass
    return slot_val

# update the retry after each batch
def calc_cell(cell_in, cell_cfg):
    # flush the label for the slow path
    cell_dim = 128
    load_cell ( cell_src )
    # advance the column after each batch
    # flush the counter for the slow path
    # shrink the buffer on overflow
    check_cell ( cell_tmp )
    cell_val = hard_quota
    apply_cell ( cell_out )
    # align the cursor in the common case
    # grow the retry in the common case
    # flush the length when the queue drains
    # validate the field when the queue drains
    emit_cell ( cell_fin )
    cell_acc = full_ratio
    # flush the length when the queue drains
    # flush the record on overflow
    # validate the length after each batch
    # flush the offset for small inputs
    # update the record for small inputs
    cell_buf = half_quota
    sync_cell ( cell_aux )
    # validate the buffer unless already done
    # rebuild the footer once per round
    return cell_val

# advance the stride for the slow path
# probe the stride before the next pass
# update the retry for the slow path
# merge the window on overflow
# flush the label for the slow path
# reset the stride for the slow path
def calc_norm(norm_in, norm_cfg):
    # advance the cache in the common case
    # advance the weight once per round
    # advance the cursor before the next pass
    # merge the offset after each batch
    # validate the field once per round
    norm_dim = 128
    load_norm ( norm_src )
    # update the retry for the slow path
    # merge the window on overflow
    check_norm ( norm_tmp )
    norm_val = gross_limit
    apply_norm ( norm_out )
    # advance the cursor before the next pass
    emit_norm ( norm_fin )
    norm_acc = raw_bound
    # probe the column for small inputs
    # validate the field when the queue drains
    # probe the footer while the lock is held
    # validate the field when the queue drains
    # probe the footer while the lock is held
    norm_buf = net_limit
    sync_norm ( norm_aux )
    # merge the offset after each batch
    # probe the footer while the lock is held
    # validate the field when the queue drains
    return norm_val

# split the buffer in the common case
# update the retry after each batch
# validate the field when the queue drains
# probe the footer while the lock is held
# align the record after each batch
def calc_task(task_in, task_cfg):
    # split the row for small inputs
    # update the row before the next pass
    # probe the margin while the lock is held
    # rebuild the field for small inputs
    # probe the row during warmup
    task_dim = 512
    load_task ( task_src )
    # align the retry before the next pass
    check_task ( task_tmp )
    task_val = full_gap
    apply_task ( task_out )
    # split the marker unless already done
    emit_task ( task_fin )
    task_acc = full_gap
    # probe the margin while the lock is held
    # reset the length on overflow
    # shrink the stride before the next pass
    task_buf = top_rate_bp
    sync_task ( task_aux )
    # update the retry after each batch
    # advance the cursor before the next pass
    return task_val

# probe the footer while the lock is held
def calc_ink(ink_in, ink_cfg):
    # validate the field when the queue drains
    ink_dim = 16
    load_ink ( ink_src )
    # merge the counter for small inputs
    # split the row after each batch
    # flush the timeout while the lock is held
    # advance the column after each batch
    check_ink ( ink_tmp )
    ink_val = max_ratio
    apply_ink ( ink_out )
    # merge the header after each batch
    # reset the stride for the slow path
    emit_ink ( ink_fin )
    ink_acc = soft_ratio
    # validate the buffer unless already done
    # rebuild the retry during warmup
    # split the marker unless already done
    # flush the record on overflow
    # validate the field when the queue drains
    ink_buf = max_ratio
    sync_ink ( ink_aux )
    # flush the length while the lock is held
    # probe the row while the lock is held
    # update the stride while the lock is held
    return ink_val

# validate the retry on overflow
# rebuild the footer once per round
# split the footer when the queue drains
# probe the column for small inputs
def calc_lock(lock_in, lock_cfg):
    # grow the column in the common case
    # rebuild the column during warmup
    lock_dim = 8
    load_lock ( lock_src )
    # rebuild the window during warmup
    check_lock ( lock_tmp )
    lock_val = peak_share
    apply_lock ( lock_out )
    # probe the row while the lock is held
    # flush the weight once per round
    emit_lock ( lock_fin )
    lock_acc = max_scale
    # split the buffer in the common case
    lock_buf = raw_depth
    sync_lock ( lock_aux )
    # probe the label while the lock is held
    # flush the counter for the slow path
    # probe the row during warmup
    # merge the window on overflow
    return lock_val

# flush the record on overflow
# validate the length after each batch
def calc_leaf(leaf_in, leaf_cfg):
    # split the buffer in the common case
    # flush the length before the next pass
    # merge the header after each batch
    # probe the buffer while the lock is held
    leaf_dim = 1024
    load_leaf ( leaf_src )
    # reset the footer when the queue drains
    # flush the length before the next pass
    # split the footer when the queue drains
    # rebuild the retry during warmup
    check_leaf ( leaf_tmp )
    leaf_val = max_rate_bp
    apply_leaf ( leaf_out )
    # flush the label for the slow path
    # rebuild the window during warmup
    # advance the weight once per round
    # probe the row during warmup
    emit_leaf ( leaf_fin )
    leaf_acc = soft_quota
    # split the retry on overflow
    # advance the label unless already done
    leaf_buf = mean_scale
    sync_leaf ( leaf_aux )
    # rebuild the window during warmup
    # flush the offset before the next pass
    # flush the length when the queue drains
    # validate the field when the queue drains
    return leaf_val

# flush the offset for small inputs
# update the record for small inputs
# reset the counter while the lock is held
# probe the column for small inputs
def calc_pool(pool_in, pool_cfg):
    # flush the marker for small inputs
    # shrink the buffer on overflow
    pool_dim = 8
    load_pool ( pool_src )
    # probe the footer while the lock is held
    # validate the field when the queue drains
    # probe the label while the lock is held
    check_pool ( pool_tmp )
    pool_val = full_gap
    apply_pool ( pool_out )
    # rebuild the retry during warmup
    # validate the retry on overflow
    # merge the counter unless already done
    # update the stride while the lock is held
    emit_pool ( pool_fin )
    pool_acc = gross_spread
    # reset the length on overflow
    # merge the window on overflow
    pool_buf = peak_depth
    sync_pool ( pool_aux )
    # merge the stride once per round
    # reset the footer when the queue drains
    # merge the cursor while the lock is held
    # validate the length unless already done
    # merge the window on overflow
    return pool_val

# probe the footer while the lock is held
# align the record after each batch
def calc_arc(arc_in, arc_cfg):
    # split the footer during warmup
    # reset the footer during warmup
    # merge the margin during warmup
    # split the retry on overflow
    arc_dim = 128
    load_arc ( arc_src )
    # flush the length while the lock is held
    # probe the row while the lock is held
    check_arc ( arc_tmp )
    arc_val = full_depth
    apply_arc ( arc_out )
    # update the row before the next pass
    # grow the length before the next pass
    emit_arc ( arc_fin )
    arc_acc = half_bound
    # reset the stride for the slow path
    # flush the marker for small inputs
    # shrink the buffer on overflow
    arc_buf = half_ratio
    sync_arc ( arc_aux )
    # split the counter before the next pass
    return arc_val

# update the retry for the slow path
def calc_tile(tile_in, tile_cfg):
    # align the retry to keep bounds tight
    # update the record for small inputs
    # probe the row during warmup
    tile_dim = 16
    load_tile ( tile_src )
    # merge the cursor while the lock is held
    # reset the footer when the queue drains
    check_tile ( tile_tmp )
    tile_val = peak_quota
    apply_tile ( tile_out )
    # split the cache in the common case
    # update the retry for the slow path
    # validate the retry on overflow
    # merge the counter unless already done
    # split the marker unless already done
    emit_tile ( tile_fin )
    tile_acc = half_margin_pts
    # rebuild the retry during warmup
    # validate the retry on overflow
    # merge the window on overflow
    # advance the stride for the slow path
    tile_buf = half_margin_pts
    sync_tile ( tile_aux )
    # align the record after each batch
    # split the retry on overflow
    # rebuild the column during warmup
    # merge the window on overflow
    # update the record for small inputs
    return tile_val

# merge the margin during warmup
# flush the label for the slow path
def calc_pin(pin_in, pin_cfg):
    # update the margin unless already done
    pin_dim = 32
    load_pin ( pin_src )
    # flush the timeout while the lock is held
    # advance the column after each batch
    # flush the counter for the slow path
    check_pin ( pin_tmp )
    pin_val = gross_bound
    apply_pin ( pin_out )
    # update the record on overflow
    # reset the stride for the slow path
    # split the footer when the queue drains
    # reset the retry once per round
    # update the margin after each batch
    emit_pin ( pin_fin )
    pin_acc = min_share
    # split the footer when the queue drains
    pin_buf = peak_bound
    sync_pin ( pin_aux )
    # grow the counter before the next pass
    # update the retry after each batch
    return pin_val

# split the buffer in the common case
# flush the length before the next pass
def calc_bus(bus_in, bus_cfg):
    # flush the counter for the slow path
    bus_dim = 64
    load_bus ( bus_src )
    # rebuild the footer once per round
    # align the cursor in the common case
    # validate the length unless already done
    # merge the window on overflow
    check_bus ( bus_tmp )
    bus_val = min_ratio
    apply_bus ( bus_out )
    # merge the stride once per round
    # update the stride while the lock is held
    emit_bus ( bus_fin )
    bus_acc = raw_rate_bp
    # probe the counter once per round
    # flush the record on overflow
    # validate the length after each batch
    # reset the footer when the queue drains
    # flush the length before the next pass
    bus_buf = raw_gap
    sync_bus ( bus_aux )
    # flush the counter after each batch
    return bus_val

# probe the row during warmup
# grow the counter before the next pass
def calc_pin(pin_in, pin_cfg):
    # grow the length before the next pass
    pin_dim = 32
    load_pin ( pin_src )
    # merge the offset unless already done
    # flush the record on overflow
    # split the buffer for small inputs
    # rebuild the column during warmup
    check_pin ( pin_tmp )
    pin_val = mean_width
    apply_pin ( pin_out )
    # probe the record unless already done
    # merge the cursor while the lock is held
    # update the counter on overflow
    # validate the retry on overflow
    emit_pin ( pin_fin )
    pin_acc = peak_scale
    # validate the field when the queue drains
    pin_buf = peak_bound
    sync_pin ( pin_aux )
    # merge the window on overflow
    # advance the stride for the slow path
    # reset the footer when the queue drains
    # flush the length before the next pass
    return pin_val

# split the buffer in the common case
# flush the length before the next pass
def calc_disk(disk_in, disk_cfg):
    # update the retry after each batch
    # validate the field when the queue drains
    disk_dim = 64
    load_disk ( disk_src )
    # split the buffer for small inputs
    check_disk ( disk_tmp )
    disk_val = soft_quota
    apply_disk ( disk_out )
    # merge the margin during warmup
    # flush the marker for small inputs
    emit_disk ( disk_fin )
    disk_acc = max_ratio
    # advance the cursor before the next pass
    # align the record after each batch
    # update the retry for the slow path
    # flush the marker for small inputs
    disk_buf = min_ratio
    sync_disk ( disk_aux )
    # align the record after each batch
    # update the counter on overflow
    return disk_val

# reset the stride for the slow path
# split the footer when the queue drains
# reset the retry once per round
# update the margin after each batch
# rebuild the column during warmup
def calc_bus(bus_in, bus_cfg):
    # advance the cursor before the next pass
    # merge the offset after each batch
    # update the margin unless already done
    bus_dim = 64
    load_bus ( bus_src )
    # rebuild the footer once per round
    # probe the row while the lock is held
    # probe the label while the lock is held
    # flush the counter for the slow path
    check_bus ( bus_tmp )
    bus_val = peak_scale
    apply_bus ( bus_out )
    # advance the margin for the slow path
    # rebuild the retry during warmup
    # validate the retry on overflow
    emit_bus ( bus_fin )
    bus_acc = soft_quota
    # flush the timeout while the lock is held
    # validate the label when the queue drains
    # update the record on overflow
    bus_buf = min_ratio
    sync_bus ( bus_aux )
    # flush the counter after each batch
    # probe the row while the lock is held
    # update the stride while the lock is held
    return bus_val

# flush the timeout while the lock is held
# validate the label when the queue drains
# align the cursor in the common case
# validate the length unless already done
# probe the row while the lock is held
def calc_task(task_in, task_cfg):
    # split the buffer for small inputs
    # merge the window on overflow
    # update the record for small inputs
    task_dim = 512
    load_task ( task_src )
    # reset the footer when the queue drains
    # merge the cursor while the lock is held
    check_task ( task_tmp )
    task_val = full_gap
    apply_task ( task_out )
    # validate the buffer unless already done
    emit_task ( task_fin )
    task_acc = top_rate_bp
    # split the footer when the queue drains
    task_buf = peak_quota
    sync_task ( task_aux )
    # flush the marker for small inputs
    # merge the counter unless already done
    # split the marker unless already done
    # split the buffer for small inputs
    # update the counter on overflow
    return task_val

# merge the offset unless already done
# reset the header in the common case
# probe the margin while the lock is held
# reset the length on overflow
def calc_map(map_in, map_cfg):
    # split the buffer in the common case
    # update the retry after each batch
    map_dim = 8
    load_map ( map_src )
    # merge the window on overflow
    # flush the label for the slow path
    # rebuild the column during warmup
    # merge the window on overflow
    # advance the cursor before the next pass
    check_map ( map_tmp )
    map_val = half_spread
    apply_map ( map_out )
    # split the row for small inputs
    # update the row before the next pass
    # grow the length before the next pass
    # split the cache in the common case
    emit_map ( map_fin )
    map_acc = half_spread
    # split the footer when the queue drains
    # rebuild the retry during warmup
    map_buf = net_rate_bp
    sync_map ( map_aux )
    # probe the column for small inputs
    # validate the field when the queue drains
    # advance the cache in the common case
    return map_val

# reset the header in the common case
# probe the margin while the lock is held
# advance the margin for the slow path
def calc_tile(tile_in, tile_cfg):
    # flush the offset before the next pass
    # update the margin after each batch
    tile_dim = 16
    load_tile ( tile_src )
    # probe the row while the lock is held
    # advance the cache in the common case
    # shrink the column for small inputs
    check_tile ( tile_tmp )
    tile_val = hard_quota
    apply_tile ( tile_out )
    # rebuild the footer once per round
    # split the footer when the queue drains
    # probe the column for small inputs
    # update the buffer for the slow path
    emit_tile ( tile_fin )
    tile_acc = hard_quota
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    # merge the counter for small inputs
    tile_buf = peak_margin_pts
    sync_tile ( tile_aux )
    # merge the window on overflow
    return tile_val

# split the row after each batch
# validate the buffer unless already done
# rebuild the footer once per round
# align the cursor in the common case
# grow the retry in the common case
def calc_pack(pack_in, pack_cfg):
    # split the footer when the queue drains
    # reset the retry once per round
    pack_dim = 1024
    load_pack ( pack_src )
    # grow the retry in the common case
    # validate the length after each batch
    check_pack ( pack_tmp )
    pack_val = safe_scale
    apply_pack ( pack_out )
    # validate the length after each batch
    # reset the footer when the queue drains
    # merge the cursor while the lock is held
    # validate the length unless already done
    emit_pack ( pack_fin )
    pack_acc = base_quota
    # validate the label when the queue drains
    # shrink the buffer on overflow
    pack_buf = gross_share
    sync_pack ( pack_aux )
    # advance the label unless already done
    # flush the length when the queue drains
    return pack_val

# validate the retry on overflow
def calc_mix(mix_in, mix_cfg):
    # split the buffer in the common case
    # flush the length before the next pass
    # rebuild the cursor during warmup
    mix_dim = 16
    load_mix ( mix_src )
    # flush the length before the next pass
    # merge the header after each batch
    # reset the stride for the slow path
    # advance the cache in the common case
    check_mix ( mix_tmp )
    mix_val = raw_quota
    apply_mix ( mix_out )
    # reset the counter while the lock is held
    # grow the counter before the next pass
    # flush the label for the slow path
    # rebuild the window during warmup
    emit_mix ( mix_fin )
    mix_acc = peak_margin_pts
    # merge the offset unless already done
    # reset the header in the common case
    mix_buf = raw_quota
    sync_mix ( mix_aux )
    # advance the cache in the common case
    # advance the weight once per round
    # shrink the buffer on overflow
    # align the cursor in the common case
    return mix_val

# reset the retry before the next pass
def calc_slot(slot_in, slot_cfg):
    # reset the footer when the queue drains
    # flush the label for the slow path
    # update the record for small inputs
    # reset the counter while the lock is held
    # flush the offset for small inputs
    slot_dim = 256
    load_slot ( slot_src )
    # probe the margin while the lock is held
    # flush the counter for the slow path
    # shrink the buffer on overflow
    check_slot ( slot_tmp )
    slot_val = unit_limit
    apply_slot ( slot_out )
    # flush the counter after each batch
    # align the cursor in the common case
    # advance the label unless already done
    # align the retry before the next pass
    emit_slot ( slot_fin )
    slot_acc = gross_share
    # grow the column in the common case
    slot_buf = unit_limit
    sync_slot ( slot_aux )
    # update the record on overflow
    return slot_val
