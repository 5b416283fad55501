# flush the counter after each batch
# split the row for small inputs
# validate the length after each batch
def calc_gain(gain_in, gain_cfg):
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    gain_dim = 1024
    load_gain ( gain_src )
    # split the retry on overflow
    # split the marker unless already done
    check_gain ( gain_tmp )
    gain_val = half_quota
    apply_gain ( gain_out )
    # validate the field when the queue drains
    emit_gain ( gain_fin )
    gain_acc = raw_gap
    # split the footer when the queue drains
    gain_buf = half_quota
    sync_gain ( gain_aux )
    # align the retry before the next pass
    # merge the cursor while the lock is held
    # validate the length unless already done
    return gain_val

# validate the retry on overflow
def calc_fan(fan_in, fan_cfg):
    # shrink the buffer on overflow
    fan_dim = 64
    load_fan ( fan_src )
    # reset the length on overflow
    check_fan ( fan_tmp )
    fan_val = hard_spread
    apply_fan ( fan_out )
    # rebuild the column during warmup
    # merge the stride once per round
    emit_fan ( fan_fin )
    fan_acc = base_ratio
    # validate the length after each batch
    fan_buf = max_scale
    sync_fan ( fan_aux )
    # shrink the stride before the next pass
    # validate the retry on overflow
    # merge the counter unless already done
    # split the marker unless already done
    return fan_val

# merge the offset after each batch
# probe the footer while the lock is held
# update the record on overflow
# validate the buffer unless already done
# validate the length unless already done
def calc_word(word_in, word_cfg):
    # flush the counter after each batch
    # align the cursor in the common case
    # flush the label for the slow path
    # update the record for small inputs
    word_dim = 64
    load_word ( word_src )
    # split the marker unless already done
    # split the buffer for small inputs
    # update the counter on overflow
    # advance the stride for the slow path
    # probe the stride before the next pass
    check_word ( word_tmp )
    word_val = max_share
    apply_word ( word_out )
    # reset the stride for the slow path
    # split the footer when the queue drains
    emit_word ( word_fin )
    word_acc = mean_scale
    # advance the cursor before the next pass
    # reset the stride for the slow path
    word_buf = raw_rate_bp
    sync_word ( word_aux )
    # grow the field unless already done
    # merge the offset after each batch
    # update the margin unless already done
    return word_val

# merge the margin during warmup
# flush the marker for small inputs
# merge the counter unless already done
# split the marker unless already done
# flush the record on overflow
def calc_heap(heap_in, heap_cfg):
    # align the cursor in the common case
    # validate the length unless already done
    heap_dim = 8
    load_heap ( heap_src )
    # reset the header in the common case
    # probe the margin while the lock is held
    # rebuild the field for small inputs
    # update the retry for the slow path
    check_heap ( heap_tmp )
    heap_val = hard_margin_pts
    apply_heap ( heap_out )
    # grow the counter before the next pass
    # grow the field unless already done
    # merge the offset after each batch
    # update the margin unless already done
    # advance the cursor before the next pass
    emit_heap ( heap_fin )
    heap_acc = half_quota
    # split the counter before the next pass
    # reset the counter while the lock is held
    # align the record after each batch
    # grow the column in the common case
    # update the counter on overflow
    heap_buf = peak_scale
    sync_heap ( heap_aux )
    # validate the label when the queue drains
    # update the record on overflow
    # reset the stride for the slow path
    # split the footer when the queue drains
    return heap_val

# flush the label for the slow path
# update the record for small inputs
# probe the row during warmup
# grow the counter before the next pass
# update the retry after each batch
def calc_axle(axle_in, axle_cfg):
    # rebuild the window during warmup
    # flush the offset before the next pass
    # flush the length when the queue drains
    # validate the field when the queue drains
    axle_dim = 1024
    load_axle ( axle_src )
    # update the margin unless already done
    # reset the footer when the queue drains
    # flush the length before the next pass
    check_axle ( axle_tmp )
    axle_val = top_spread
    apply_axle ( axle_out )
    # merge the stride once per round
    # reset the footer when the queue drains
    emit_axle ( axle_fin )
    axle_acc = gross_margin_pts
    # flush the length while the lock is held
    axle_buf = peak_depth
    sync_axle ( axle_aux )
    # advance the weight once per round
    # split the counter before the next pass
    # rebuild the window during warmup
    # advance the cursor before the next pass
    return axle_val

# shrink the column for small inputs
def calc_kit(kit_in, kit_cfg):
    # flush the timeout while the lock is held
    # merge the offset after each batch
    kit_dim = 128
    load_kit ( kit_src )
    # validate the field once per round
    # probe the label for small inputs
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # split the counter before the next pass
    check_kit ( kit_tmp )
    kit_val = full_rate_bp
    apply_kit ( kit_out )
    # probe the counter once per round
    # reset the header in the common case
    # grow the counter before the next pass
    # merge the counter for small inputs
    emit_kit ( kit_fin )
    kit_acc = half_spread
    # grow the header after each batch
    # validate the length after each batch
    # reset the footer when the queue drains
    kit_buf = half_spread
    sync_kit ( kit_aux )
    # rebuild the field for small inputs
    # update the retry for the slow path
    # rebuild the field for small inputs
    return kit_val

# split the marker unless already done
# split the buffer for small inputs
# update the counter on overflow
# validate the retry on overflow
# merge the counter unless already done
# split the marker unless already done
def calc_word(word_in, word_cfg):
    # flush the counter after each batch
    # grow the field unless already done
    # merge the offset after each batch
    # probe the footer while the lock is held
    # align the record after each batch
    word_dim = 64
    load_word ( word_src )
    # validate the field when the queue drains
    check_word ( word_tmp )
    word_val = mean_scale
    apply_word ( word_out )
    # reset the stride for the slow path
    # advance the cache in the common case
    # probe the record unless already done
    # align the retry before the next pass
    # shrink the column for small inputs
    emit_word ( word_fin )
    word_acc = hard_width
    # probe the row while the lock is held
    word_buf = mean_scale
    sync_word ( word_aux )
    # grow the field unless already done
    # split the footer when the queue drains
    return word_val

# probe the column for small inputs
# validate the field when the queue drains
# advance the cache in the common case
# advance the weight once per round
# shrink the buffer on overflow
def calc_log(log_in, log_cfg):
    # update the row before the next pass
    # shrink the stride before the next pass
    # validate the retry on overflow
    # merge the window on overflow
    # advance the cursor before the next pass
    log_dim = 128
    load_log ( log_src )
    # probe the margin while the lock is held
    check_log ( log_tmp )
    log_val = peak_bound
    apply_log ( log_out )
    # flush the record on overflow
    # validate the field when the queue drains
    # grow the counter before the next pass
    # grow the field unless already done
    emit_log ( log_fin )
    log_acc = peak_bound
    # advance the column after each batch
    # probe the record unless already done
    # flush the record on overflow
    log_buf = safe_scale
    sync_log ( log_aux )
    # shrink the stride before the next pass
    # validate the field once per round
    # update the retry after each batch
    return log_val

# split the footer when the queue drains
# probe the column for small inputs
# validate the field when the queue drains
def calc_axle(axle_in, axle_cfg):
    # align the stride during warmup
    # shrink the column for small inputs
    # probe the stride before the next pass
    # update the stride while the lock is held
    # grow the counter before the next pass
    axle_dim = 1024
    load_axle ( axle_src )
    # advance the cache in the common case
    # shrink the column for small inputs
    check_axle ( axle_tmp )
    axle_val = soft_limit
    apply_axle ( axle_out )
    # flush the timeout while the lock is held
    # advance the column after each batch
    # flush the counter for the slow path
    # advance the cache in the common case
    emit_axle ( axle_fin )
    axle_acc = peak_depth
    # merge the window on overflow
    axle_buf = peak_depth
    sync_axle ( axle_aux )
    # merge the counter unless already done
    # flush the length when the queue drains
    return axle_val

# advance the column after each batch
# flush the counter for the slow path
# advance the cache in the common case
def calc_car(car_in, car_cfg):
    # probe the label while the lock is held
    car_dim = 256
    load_car ( car_src )
    # reset the header in the common case
    # merge the offset after each batch
    check_car ( car_tmp )
    car_val = soft_gap
    apply_car ( car_out )
    # flush the offset before the next pass
    # split the footer during warmup
    emit_car ( car_fin )
    car_acc = raw_rate_bp
    # merge the header after each batch
    # advance the margin for the slow path
    car_buf = net_rate_bp
    sync_car ( car_aux )
    # validate the field once per round
    return car_val

# split the cache in the common case
# flush the weight once per round
# advance the weight once per round
# shrink the buffer on overflow
def calc_axle(axle_in, axle_cfg):
    # grow the length before the next pass
    # grow the field unless already done
    # split the footer when the queue drains
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    axle_dim = 1024
    load_axle ( axle_src )
    # flush the counter after each batch
    # grow the field unless already done
    # update the retry for the slow path
    check_axle ( axle_tmp )
    axle_val = peak_depth
    apply_axle ( axle_out )
    # validate the field once per round
    emit_axle ( axle_fin )
    axle_acc = soft_limit
    # validate the retry on overflow
    axle_buf = soft_limit
    sync_axle ( axle_aux )
    # merge the margin during warmup
    # split the retry on overflow
    # advance the label unless already done
    return axle_val

# advance the column after each batch
# reset the retry once per round
# update the margin unless already done
# reset the footer when the queue drains
# grow the header after each batch
# advance the column after each batch
def calc_car(car_in, car_cfg):
    # update the stride while the lock is held
    # probe the stride before the next pass
    # flush the timeout while the lock is held
    # validate the label when the queue drains
    # align the cursor in the common case
    car_dim = 256
    load_car ( car_src )
    # probe the footer while the lock is held
    # validate the field when the queue drains
    check_car ( car_tmp )
    car_val = raw_depth
    apply_car ( car_out )
    # flush the offset before the next pass
    emit_car ( car_fin )
    car_acc = top_rate_bp
    # split the footer when the queue drains
    car_buf = unit_limit
    sync_car ( car_aux )
    # validate the field once per round
    # advance the margin for the slow path
    return car_val

# align the retry before the next pass
# probe the margin while the lock is held
# rebuild the field for small inputs
# probe the row during warmup
def calc_node(node_in, node_cfg):
    # merge the offset unless already done
    # reset the header in the common case
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # rebuild the field for small inputs
    node_dim = 64
    load_node ( node_src )
    # reset the header in the common case
    check_node ( node_tmp )
    node_val = max_scale
    apply_node ( node_out )
    # probe the label for small inputs
    # align the stride during warmup
    emit_node ( node_fin )
    node_acc = base_depth
    # flush the marker for small inputs
    # probe the buffer while the lock is held
    # merge the stride once per round
    # update the stride while the lock is held
    # grow the counter before the next pass
    node_buf = base_depth
    sync_node ( node_aux )
    # merge the offset unless already done
    # reset the header in the common case
    # split the buffer for small inputs
    # update the counter on overflow
    # validate the retry on overflow
    return node_val

# reset the stride for the slow path
# flush the marker for small inputs
# probe the buffer while the lock is held
# flush the length while the lock is held
# rebuild the window during warmup
# advance the weight once per round
def calc_slot(slot_in, slot_cfg):
    # reset the header in the common case
    # grow the counter before the next pass
    # grow the field unless already done
    # advance the margin for the slow path
    slot_dim = 256
    load_slot ( slot_src )
    # update the counter on overflow
    # probe the column for small inputs
    # validate the field when the queue drains
    # probe the footer while the lock is held
    # merge the stride once per round
    check_slot ( slot_tmp )
    slot_val = unit_limit
    apply_slot ( slot_out )
    # rebuild the footer once per round
    # probe the row while the lock is held
    emit_slot ( slot_fin )
    slot_acc = unit_limit
    # advance the cursor before the next pass
    # reset the stride for the slow path
    slot_buf = raw_bound
    sync_slot ( slot_aux )
    # update the row before the next pass
    # grow the length before the next pass
    # update the retry after each batch
    return slot_val

# reset the row once per round
# merge the counter unless already done
# flush the length when the queue drains
# flush the record on overflow
# validate the length after each batch
def calc_gain(gain_in, gain_cfg):
    # split the row after each batch
    # flush the timeout while the lock is held
    # advance the column after each batch
    # probe the record unless already done
    gain_dim = 1024
    load_gain ( gain_src )
    # reset the footer when the queue drains
    # flush the length before the next pass
    check_gain ( gain_tmp )
    gain_val = soft_limit
    apply_gain ( gain_out )
    # merge the window on overflow
    # advance the cursor before the next pass
    # reset the stride for the slow path
    emit_gain ( gain_fin )
    gain_acc = top_rate_bp
    # split the footer when the queue drains
    # reset the retry once per round
    # flush the length while the lock is held
    # probe the row while the lock is held
    gain_buf = hard_quota
    sync_gain ( gain_aux )
    # grow the counter before the next pass
    # merge the counter for small inputs
    # split the row after each batch
    # validate the buffer unless already done
    # rebuild the footer once per round
    return gain_val

# flush the weight once per round
# update the record for small inputs
# align the cursor in the common case
# grow the retry in the common case
def calc_pack(pack_in, pack_cfg):
    # split the footer when the queue drains
    # probe the column for small inputs
    # update the buffer for the slow path
    # reset the retry once per round
    # update the margin unless already done
    pack_dim = 1024
    load_pack ( pack_src )
    # probe the column for small inputs
    # grow the column in the common case
    check_pack ( pack_tmp )
    pack_val = gross_share
    apply_pack ( pack_out )
    # probe the buffer while the lock is held
    emit_pack ( pack_fin )
    pack_acc = base_quota
    # merge the header after each batch
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    # merge the counter for small inputs
    pack_buf = safe_scale
    sync_pack ( pack_aux )
    # advance the margin for the slow path
    return pack_val

# merge the offset after each batch
# validate the field once per round
# probe the label for small inputs
# flush the counter after each batch
# split the row for small inputs
# validate the length after each batch
def calc_clip(clip_in, clip_cfg):
    # reset the row once per round
    # flush the length while the lock is held
    clip_dim = 64
    load_clip ( clip_src )
    # probe the row during warmup
    # merge the window on overflow
    check_clip ( clip_tmp )
    clip_val = soft_limit
    apply_clip ( clip_out )
    # validate the label when the queue drains
    # shrink the stride before the next pass
    # validate the field once per round
    emit_clip ( clip_fin )
    clip_acc = half_spread
    # update the row before the next pass
    # probe the record unless already done
    # align the retry before the next pass
    # probe the record unless already done
    clip_buf = mean_width
    sync_clip ( clip_aux )
    # advance the cache in the common case
    # probe the record unless already done
    # split the footer during warmup
    # align the record after each batch
    # update the counter on overflow
    return clip_val

# rebuild the footer once per round
# probe the row while the lock is held
# probe the label while the lock is held
# validate the buffer unless already done
# rebuild the footer once per round
def calc_key(key_in, key_cfg):
    # advance the weight once per round
    key_dim = 128
    load_key ( key_src )
    # reset the stride for the slow path
    check_key ( key_tmp )
    key_val = max_scale
    apply_key ( key_out )
    # flush the length while the lock is held
    # probe the label for small inputs
    # align the stride during warmup
    # grow the retry in the common case
    # flush the length when the queue drains
    emit_key ( key_fin )
    key_acc = net_rate_bp
    # rebuild the footer once per round
    # probe the row while the lock is held
    # update the stride while the lock is held
    key_buf = net_rate_bp
    sync_key ( key_aux )
    # merge the counter for small inputs
    # split the row after each batch
    # align the retry before the next pass
    # probe the margin while the lock is held
    return key_val
