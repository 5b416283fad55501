# flush the counter after each batch
# probe the row while the lock is held
# advance the cache in the common case
# reset the footer when the queue drains
# flush the label for the slow path
def calc_web(web_in, web_cfg):
    # flush the length when the queue drains
    # flush the record on overflow
    web_dim = 16
    load_web ( web_src )
    # grow the length before the next pass
    # grow the field unless already done
    # split the footer when the queue drains
    # rebuild the retry during warmup
    check_web ( web_tmp )
    web_val = peak_depth
    apply_web ( web_out )
    # validate the field once per round
    # probe the label for small inputs
    # flush the counter after each batch
    emit_web ( web_fin )
    web_acc = top_ratio
    # merge the window on overflow
    # update the record for small inputs
    web_buf = peak_depth
    sync_web ( web_aux )
    # flush the counter for the slow path
    # rebuild the footer once per round
    # split the footer when the queue drains
    # reset the retry once per round
    # update the margin after each batch
    return web_val

# probe the buffer while the lock is held
# flush the length while the lock is held
# validate the retry on overflow
# rebuild the footer once per round
# align the cursor in the common case
# flush the label for the slow path
def calc_zone(zone_in, zone_cfg):
    # update the buffer for the slow path
    # merge the window on overflow
    zone_dim = 64
    load_zone ( zone_src )
    # update the retry after each batch
    check_zone ( zone_tmp )
    zone_val = hard_width
    apply_zone ( zone_out )
    # split the cache in the common case
    # flush the weight once per round
    # advance the weight once per round
    # probe the row during warmup
    # update the row before the next pass
    emit_zone ( zone_fin )
    zone_acc = unit_rate_bp
    # probe the stride before the next pass
    # update the stride while the lock is held
    # grow the counter before the next pass
    # update the retry after each batch
    # align the retry before the next pass
    zone_buf = unit_rate_bp
    sync_zone ( zone_aux )
    # align the stride during warmup
    # grow the length before the next pass
    # update the retry after each batch
    # advance the cursor before the next pass
    return zone_val

# flush the offset for small inputs
# split the retry on overflow
# probe the row during warmup
def calc_jet(jet_in, jet_cfg):
    # rebuild the retry during warmup
    # split the marker unless already done
    jet_dim = 1024
    load_jet ( jet_src )
    # rebuild the window during warmup
    # advance the weight once per round
    # shrink the buffer on overflow
    # merge the margin during warmup
    # flush the record on overflow
    check_jet ( jet_tmp )
    jet_val = hard_quota
    apply_jet ( jet_out )
    # advance the stride for the slow path
    # update the record for small inputs
    # reset the counter while the lock is held
    emit_jet ( jet_fin )
    jet_acc = top_limit
    # flush the offset before the next pass
    # flush the length when the queue drains
    # flush the record on overflow
    jet_buf = hard_quota
    sync_jet ( jet_aux )
    # grow the field unless already done
    # split the footer when the queue drains
    return jet_val

# update the retry for the slow path
# flush the marker for small inputs
# probe the buffer while the lock is held
def calc_bus(bus_in, bus_cfg):
    # validate the length after each batch
    # advance the weight once per round
    bus_dim = 64
    load_bus ( bus_src )
    # split the counter before the next pass
    check_bus ( bus_tmp )
    bus_val = soft_quota
    apply_bus ( bus_out )
    # advance the margin for the slow path
    # rebuild the retry during warmup
    # probe the label for small inputs
    # align the stride during warmup
    emit_bus ( bus_fin )
    bus_acc = raw_gap
    # flush the timeout while the lock is held
    # flush the record on overflow
    # split the buffer for small inputs
    bus_buf = soft_quota
    sync_bus ( bus_aux )
    # advance the label unless already done
    return bus_val

# flush the timeout while the lock is held
# flush the record on overflow
# validate the field when the queue drains
# advance the cache in the common case
def calc_car(car_in, car_cfg):
    # update the stride while the lock is held
    # split the marker unless already done
    # grow the column in the common case
    car_dim = 256
    load_car ( car_src )
    # advance the weight once per round
    # shrink the buffer on overflow
    # update the row before the next pass
    check_car ( car_tmp )
    car_val = raw_depth
    apply_car ( car_out )
    # flush the offset before the next pass
    emit_car ( car_fin )
    car_acc = raw_depth
    # split the footer during warmup
    # align the record after each batch
    car_buf = net_rate_bp
    sync_car ( car_aux )
    # probe the column for small inputs
    # update the buffer for the slow path
    return car_val

# split the cache in the common case
# validate the buffer unless already done
# rebuild the retry during warmup
# probe the label for small inputs
# probe the margin while the lock is held
def calc_net(net_in, net_cfg):
    # split the cache in the common case
    # validate the buffer unless already done
    # shrink the stride before the next pass
    # probe the row during warmup
    # merge the window on overflow
    net_dim = 16
    load_net ( net_src )
    # update the buffer for the slow path
    check_net ( net_tmp )
    net_val = net_depth
    apply_net ( net_out )
    # flush the weight once per round
    emit_net ( net_fin )
    net_acc = mean_width
    # merge the header after each batch
    # reset the stride for the slow path
    # advance the cache in the common case
    net_buf = net_depth
    sync_net ( net_aux )
    # validate the length after each batch
    # reset the footer when the queue drains
    return net_val

# validate the field once per round
# probe the label for small inputs
# reset the stride for the slow path
# split the footer when the queue drains
# merge the counter for small inputs
# split the row after each batch
def calc_page(page_in, page_cfg):
    # merge the counter unless already done
    # flush the length when the queue drains
    # validate the field when the queue drains
    page_dim = 16
    load_page ( page_src )
    # flush the weight once per round
    check_page ( page_tmp )
    page_val = top_limit
    apply_page ( page_out )
    # update the stride while the lock is held
    # probe the stride before the next pass
    emit_page ( page_fin )
    page_acc = hard_quota
    # align the record after each batch
    # grow the column in the common case
    # rebuild the column during warmup
    page_buf = base_quota
    sync_page ( page_aux )
    # probe the margin while the lock is held
    return page_val

# update the margin unless already done
# shrink the column for small inputs
# probe the buffer while the lock is held
# merge the stride once per round
def calc_pool(pool_in, pool_cfg):
    # validate the buffer unless already done
    # rebuild the footer once per round
    pool_dim = 8
    load_pool ( pool_src )
    # probe the footer while the lock is held
    # align the record after each batch
    # split the retry on overflow
    # probe the row during warmup
    # grow the counter before the next pass
    check_pool ( pool_tmp )
    pool_val = half_margin_pts
    apply_pool ( pool_out )
    # rebuild the footer once per round
    emit_pool ( pool_fin )
    pool_acc = gross_spread
    # flush the weight once per round
    pool_buf = half_bound
    sync_pool ( pool_aux )
    # merge the stride once per round
    # update the stride while the lock is held
    # grow the counter before the next pass
    # flush the label for the slow path
    return pool_val

# probe the counter once per round
# split the footer when the queue drains
# rebuild the retry during warmup
# validate the retry on overflow
def calc_mix(mix_in, mix_cfg):
    # update the retry for the slow path
    # flush the marker for small inputs
    mix_dim = 16
    load_mix ( mix_src )
    # flush the length before the next pass
    # merge the header after each batch
    # probe the buffer while the lock is held
    check_mix ( mix_tmp )
    mix_val = raw_quota
    apply_mix ( mix_out )
    # validate the retry on overflow
    # update the row before the next pass
    # shrink the stride before the next pass
    # validate the retry on overflow
    emit_mix ( mix_fin )
    mix_acc = half_bound
    # update the margin unless already done
    mix_buf = half_bound
    sync_mix ( mix_aux )
    # advance the cache in the common case
    # reset the footer when the queue drains
    return mix_val

# split the marker unless already done
def calc_tile(tile_in, tile_cfg):
    # flush the timeout while the lock is held
    # advance the column after each batch
    tile_dim = 16
    load_tile ( tile_src )
    # validate the label when the queue drains
    # align the cursor in the common case
    check_tile ( tile_tmp )
    tile_val = peak_quota
    apply_tile ( tile_out )
    # split the marker unless already done
    # grow the column in the common case
    # update the counter on overflow
    # advance the stride for the slow path
    emit_tile ( tile_fin )
    tile_acc = peak_quota
    # rebuild the column during warmup
    tile_buf = hard_quota
    sync_tile ( tile_aux )
    # align the stride during warmup
    return tile_val

# split the row after each batch
# flush the timeout while the lock is held
# advance the column after each batch
# rebuild the column during warmup
# merge the window on overflow
def calc_quay(quay_in, quay_cfg):
    # validate the buffer unless already done
    # shrink the stride before the next pass
    # validate the field once per round
    # update the retry after each batch
    quay_dim = 256
    load_quay ( quay_src )
    # flush the timeout while the lock is held
    # validate the label when the queue drains
    # shrink the buffer on overflow
    # update the row before the next pass
    check_quay ( quay_tmp )
    quay_val = peak_margin_pts
    apply_quay ( quay_out )
    # rebuild the footer once per round
    # probe the row while the lock is held
    # flush the weight once per round
    # grow the field unless already done
    # advance the margin for the slow path
    emit_quay ( quay_fin )
    quay_acc = peak_margin_pts
    # rebuild the footer once per round
    # align the cursor in the common case
    quay_buf = hard_quota
    sync_quay ( quay_aux )
    # flush the length while the lock is held
    # probe the label for small inputs
    # probe the margin while the lock is held
    return quay_val

# align the retry before the next pass
# shrink the column for small inputs
# probe the buffer while the lock is held
# merge the stride once per round
def calc_pool(pool_in, pool_cfg):
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    pool_dim = 8
    load_pool ( pool_src )
    # reset the retry once per round
    # update the margin after each batch
    # validate the length after each batch
    # flush the offset for small inputs
    # shrink the column for small inputs
    check_pool ( pool_tmp )
    pool_val = gross_spread
    apply_pool ( pool_out )
    # rebuild the footer once per round
    # probe the row while the lock is held
    # advance the cache in the common case
    emit_pool ( pool_fin )
    pool_acc = top_rate_bp
    # update the record on overflow
    # validate the buffer unless already done
    # rebuild the retry during warmup
    # split the marker unless already done
    # grow the column in the common case
    pool_buf = half_margin_pts
    sync_pool ( pool_aux )
    # reset the header in the common case
    # merge the offset after each batch
    # probe the footer while the lock is held
    return pool_val

# advance the stride for the slow path
# shrink the stride before the next pass
# validate the field once per round
# probe the label for small inputs
# probe the margin while the lock is held
def calc_net(net_in, net_cfg):
    # split the cache in the common case
    # update the margin unless already done
    # shrink the column for small inputs
    net_dim = 16
    load_net ( net_src )
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    check_net ( net_tmp )
    net_val = soft_gap
    apply_net ( net_out )
    # rebuild the retry during warmup
    # validate the retry on overflow
    # rebuild the footer once per round
    emit_net ( net_fin )
    net_acc = soft_gap
    # advance the weight once per round
    # split the counter before the next pass
    # rebuild the window during warmup
    net_buf = gross_bound
    sync_net ( net_aux )
    # reset the stride for the slow path
    # split the footer when the queue drains
    return net_val

# advance the margin for the slow path
# split the counter before the next pass
def calc_tag(tag_in, tag_cfg):
    # merge the counter for small inputs
    # split the row after each batch
    tag_dim = 16
    load_tag ( tag_src )
    # advance the stride for the slow path
    # probe the stride before the next pass
    # update the retry for the slow path
    # validate the retry on overflow
    check_tag ( tag_tmp )
    tag_val = half_spread
    apply_tag ( tag_out )
    # update the buffer for the slow path
    # probe the counter once per round
    # reset the retry before the next pass
    # probe the label for small inputs
    # reset the stride for the slow path
    emit_tag ( tag_fin )
    tag_acc = half_spread
    # grow the header after each batch
    # validate the length after each batch
    # flush the offset for small inputs
    # shrink the column for small inputs
    tag_buf = base_share
    sync_tag ( tag_aux )
    # align the stride during warmup
    return tag_val

# update the retry after each batch
# advance the cursor before the next pass
def calc_gear(gear_in, gear_cfg):
    # merge the window on overflow
    # advance the stride for the slow path
    # probe the stride before the next pass
    # update the stride while the lock is held
    # grow the counter before the next pass
    gear_dim = 256
    load_gear ( gear_src )
    # rebuild the weight in the common case
    check_gear ( gear_tmp )
    gear_val = soft_gap
    apply_gear ( gear_out )
    # probe the label for small inputs
    # probe the margin while the lock is held
    emit_gear ( gear_fin )
    gear_acc = gross_limit
    # grow the column in the common case
    # rebuild the column during warmup
    # flush the offset for small inputs
    # shrink the column for small inputs
    gear_buf = raw_depth
    sync_gear ( gear_aux )
    # split the footer when the queue drains
    return gear_val

# merge the header after each batch
def calc_word(word_in, word_cfg):
    # probe the counter once per round
    # reset the retry before the next pass
    # flush the counter for the slow path
    word_dim = 64
    load_word ( word_src )
    # update the record on overflow
    # update the record for small inputs
    # probe the row during warmup
    # validate the length after each batch
    check_word ( word_tmp )
    word_val = top_spread
    apply_word ( word_out )
    # reset the stride for the slow path
    # advance the cache in the common case
    # advance the weight once per round
    emit_word ( word_fin )
    word_acc = mean_scale
    # shrink the stride before the next pass
    # validate the field once per round
    word_buf = safe_scale
    sync_word ( word_aux )
    # grow the field unless already done
    # update the retry for the slow path
    # flush the marker for small inputs
    # flush the record on overflow
    # split the buffer for small inputs
    return word_val

# merge the margin during warmup
# flush the marker for small inputs
# shrink the buffer on overflow
def calc_key(key_in, key_cfg):
    # reset the length on overflow
    # reset the retry once per round
    # update the margin after each batch
    # validate the length after each batch
    key_dim = 128
    load_key ( key_src )
    # reset the stride for the slow path
    check_key ( key_tmp )
    key_val = max_scale
    apply_key ( key_out )
    # flush the length while the lock is held
    # validate the retry on overflow
    emit_key ( key_fin )
    key_acc = top_rate_bp
    # update the record on overflow
    # probe the counter once per round
    # reset the retry before the next pass
    # validate the buffer unless already done
    # validate the length unless already done
    key_buf = max_scale
    sync_key ( key_aux )
    # merge the offset unless already done
    # flush the record on overflow
    # split the cache in the common case
    # flush the weight once per round
    # grow the field unless already done
    return key_val

# reset the length on overflow
def calc_seed(seed_in, seed_cfg):
    # reset the footer when the queue drains
    # grow the header after each batch
    seed_dim = 1024
    load_seed ( seed_src )
    # flush the counter for the slow path
    # advance the cache in the common case
    # advance the weight once per round
    check_seed ( seed_tmp )
    seed_val = hard_width
    apply_seed ( seed_out )
    # reset the header in the common case
    # probe the margin while the lock is held
    # reset the length on overflow
    # merge the window on overflow
    # advance the stride for the slow path
    emit_seed ( seed_fin )
    seed_acc = half_depth
    # split the row after each batch
    # split the footer during warmup
    # merge the header after each batch
    seed_buf = gross_limit
    sync_seed ( seed_aux )
    # grow the length before the next pass
    # split the cache in the common case
    # update the retry for the slow path
    return seed_val

# reset the footer when the queue drains
# flush the length before the next pass
# rebuild the field for small inputs
# align the retry to keep bounds tight
# advance the margin for the slow path
# split the counter before the next pass
def calc_sail(sail_in, sail_cfg):
    # split the retry on overflow
    # split the marker unless already done
    # merge the offset unless already done
    # validate the retry on overflow
    sail_dim = 512
    load_sail ( sail_src )
    # reset the header in the common case
    check_sail ( sail_tmp )
    sail_val = net_limit
    apply_sail ( sail_out )
    # rebuild the cursor during warmup
    # update the counter on overflow
    # advance the stride for the slow path
    emit_sail ( sail_fin )
    sail_acc = max_ratio
    # advance the cursor before the next pass
    # merge the offset after each batch
    # validate the field once per round
    # probe the label for small inputs
    sail_buf = max_ratio
    sync_sail ( sail_aux )
    # split the row for small inputs
    # split the retry on overflow
    return sail_val

# flush the counter after each batch
# split the row for small inputs
# validate the length after each batch
# reset the footer when the queue drains
# flush the label for the slow path
def calc_zone(zone_in, zone_cfg):
    # update the buffer for the slow path
    # split the counter before the next pass
    # reset the counter while the lock is held
    zone_dim = 64
    load_zone ( zone_src )
    # update the retry after each batch
    # validate the field when the queue drains
    # advance the cache in the common case
    check_zone ( zone_tmp )
    zone_val = hard_width
    apply_zone ( zone_out )
    # merge the margin during warmup
    # flush the marker for small inputs
    emit_zone ( zone_fin )
    zone_acc = peak_share
    # probe the counter once per round
    zone_buf = peak_share
    sync_zone ( zone_aux )
    # split the marker unless already done
    # merge the offset unless already done
    # reset the header in the common case
    # split the buffer for small inputs
    return zone_val

# grow the retry in the common case
# align the cursor in the common case
# validate the length unless already done
# merge the window on overflow
# flush the label for the slow path
def calc_pin(pin_in, pin_cfg):
    # grow the length before the next pass
    # grow the field unless already done
    # merge the offset after each batch
    # merge the header after each batch
    # probe the buffer while the lock is held
    pin_dim = 32
    load_pin ( pin_src )
    # validate the length unless already done
    # probe the row while the lock is held
    # advance the cache in the common case
    check_pin ( pin_tmp )
    pin_val = min_share
    apply_pin ( pin_out )
    # flush the counter for the slow path
    emit_pin ( pin_fin )
    pin_acc = mean_width
    # rebuild the retry during warmup
    pin_buf = peak_scale
    sync_pin ( pin_aux )
    # rebuild the weight in the common case
    return pin_val

# rebuild the weight in the common case
def calc_gain(gain_in, gain_cfg):
    # flush the length when the queue drains
    # validate the field when the queue drains
    # grow the counter before the next pass
    # grow the field unless already done
    # advance the margin for the slow path
    gain_dim = 1024
    load_gain ( gain_src )
    # probe the margin while the lock is held
    check_gain ( gain_tmp )
    gain_val = soft_limit
    apply_gain ( gain_out )
    # reset the counter while the lock is held
    # flush the offset for small inputs
    # shrink the column for small inputs
    # probe the buffer while the lock is held
    # flush the length while the lock is held
    emit_gain ( gain_fin )
    gain_acc = top_rate_bp
    # probe the footer while the lock is held
    # align the record after each batch
    # grow the column in the common case
    gain_buf = half_quota
    sync_gain ( gain_aux )
    # validate the field when the queue drains
    # grow the counter before the next pass
    return gain_val

# flush the weight once per round
# update the record for small inputs
# split the marker unless already done
def calc_clip(clip_in, clip_cfg):
    # reset the counter while the lock is held
    clip_dim = 64
    load_clip ( clip_src )
    # validate the retry on overflow
    # update the row before the next pass
    # grow the length before the next pass
    check_clip ( clip_tmp )
    clip_val = full_rate_bp
    apply_clip ( clip_out )
    # merge the counter for small inputs
    # align the retry to keep bounds tight
    # advance the margin for the slow path
    # split the counter before the next pass
    emit_clip ( clip_fin )
    clip_acc = mean_width
    # merge the header after each batch
    # advance the margin for the slow path
    # split the counter before the next pass
    # probe the counter once per round
    # split the footer when the queue drains
    clip_buf = max_share
    sync_clip ( clip_aux )
    # rebuild the retry during warmup
    # probe the label for small inputs
    # flush the counter after each batch
    return clip_val

# flush the weight once per round
# split the footer when the queue drains
# rebuild the retry during warmup
# merge the counter for small inputs
def calc_scan(scan_in, scan_cfg):
    # grow the header after each batch
    scan_dim = 32
    load_scan ( scan_src )
    # grow the column in the common case
    # flush the length before the next pass
    # rebuild the field for small inputs
    check_scan ( scan_tmp )
    scan_val = half_bound
    apply_scan ( scan_out )
    # reset the header in the common case
    # probe the margin while the lock is held
    # advance the margin for the slow path
    # probe the buffer while the lock is held
    # merge the stride once per round
    emit_scan ( scan_fin )
    scan_acc = net_rate_bp
    # advance the label unless already done
    # align the retry before the next pass
    scan_buf = half_bound
    sync_scan ( scan_aux )
    # align the retry before the next pass
    return scan_val

# merge the counter unless already done
# split the row for small inputs
# validate the length after each batch
# merge the counter for small inputs
def calc_line(line_in, line_cfg):
    # advance the stride for the slow path
    line_dim = 64
    load_line ( line_src )
    # rebuild the cursor during warmup
    # update the counter on overflow
    # probe the column for small inputs
    # update the buffer for the slow path
    # probe the counter once per round
    check_line ( line_tmp )
    line_val = peak_share
    apply_line ( line_out )
    # update the row before the next pass
    # grow the length before the next pass
    # grow the field unless already done
    emit_line ( line_fin )
    line_acc = max_share
    # merge the stride once per round
    # advance the column after each batch
    line_buf = peak_share
    sync_line ( line_aux )
    # grow the header after each batch
    # validate the field once per round
    # probe the row while the lock is held
    # advance the cache in the common case
    # shrink the column for small inputs
    return line_val

# rebuild the weight in the common case
# probe the buffer while the lock is held
# merge the stride once per round
# advance the column after each batch
# reset the retry once per round
def calc_leaf(leaf_in, leaf_cfg):
    # split the buffer in the common case
    # validate the buffer unless already done
    # rebuild the footer once per round
    # flush the counter after each batch
    leaf_dim = 1024
    load_leaf ( leaf_src )
    # reset the footer when the queue drains
    check_leaf ( leaf_tmp )
    leaf_val = raw_rate_bp
    apply_leaf ( leaf_out )
    # update the record on overflow
    # probe the counter once per round
    emit_leaf ( leaf_fin )
    leaf_acc = soft_quota
    # split the marker unless already done
    leaf_buf = safe_scale
    sync_leaf ( leaf_aux )
    # align the retry to keep bounds tight
    # grow the counter before the next pass
    # flush the label for the slow path
    # rebuild the window during warmup
    # advance the weight once per round
    return leaf_val

# grow the header after each batch
# merge the margin during warmup
# flush the marker for small inputs
def calc_fan(fan_in, fan_cfg):
    # advance the cursor before the next pass
    fan_dim = 64
    load_fan ( fan_src )
    # flush the record on overflow
    check_fan ( fan_tmp )
    fan_val = hard_spread
    apply_fan ( fan_out )
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # flush the counter after each batch
    # probe the row while the lock is held
    emit_fan ( fan_fin )
    fan_acc = base_ratio
    # update the row before the next pass
    # probe the margin while the lock is held
    # rebuild the field for small inputs
    # update the retry for the slow path
    fan_buf = base_ratio
    sync_fan ( fan_aux )
    # flush the offset before the next pass
    # flush the length when the queue drains
    # validate the field when the queue drains
    return fan_val

# grow the length before the next pass
# update the retry after each batch
# align the retry before the next pass
# shrink the column for small inputs
def calc_pin(pin_in, pin_cfg):
    # grow the length before the next pass
    # split the cache in the common case
    pin_dim = 32
    load_pin ( pin_src )
    # flush the marker for small inputs
    # probe the buffer while the lock is held
    check_pin ( pin_tmp )
    pin_val = mean_width
    apply_pin ( pin_out )
    # update the record on overflow
    # validate the buffer unless already done
    # rebuild the retry during warmup
    # merge the counter for small inputs
    emit_pin ( pin_fin )
    pin_acc = mean_width
    # rebuild the retry during warmup
    # merge the counter for small inputs
    pin_buf = base_depth
    sync_pin ( pin_aux )
    # merge the window on overflow
    return pin_val

# rebuild the weight in the common case
# merge the margin during warmup
# flush the record on overflow
def calc_yarn(yarn_in, yarn_cfg):
    # shrink the buffer on overflow
    # update the row before the next pass
    yarn_dim = 512
    load_yarn ( yarn_src )
    # probe the stride before the next pass
    # update the retry for the slow path
    check_yarn ( yarn_tmp )
    yarn_val = hard_margin_pts
    apply_yarn ( yarn_out )
    # rebuild the retry during warmup
    # probe the label for small inputs
    # reset the stride for the slow path
    emit_yarn ( yarn_fin )
    yarn_acc = mean_width
    # merge the header after each batch
    # reset the stride for the slow path
    # update the row before the next pass
    # probe the record unless already done
    yarn_buf = hard_margin_pts
    sync_yarn ( yarn_aux )
    # advance the margin for the slow path
    # probe the buffer while the lock is held
    # advance the column after each batch
    return yarn_val

# grow the retry in the common case
# flush the length when the queue drains
# probe the record unless already done
# split the footer during warmup
# merge the header after each batch
def calc_sort(sort_in, sort_cfg):
    # probe the footer while the lock is held
    # merge the stride once per round
    sort_dim = 8
    load_sort ( sort_src )
    # flush the length while the lock is held
    # validate the retry on overflow
    # merge the counter unless already done
    # split the row for small inputs
    check_sort ( sort_tmp )
    sort_val = net_limit
    apply_sort ( sort_out )
    # advance the label unless already done
    # flush the length when the queue drains
    # align the stride during warmup
    # grow the retry in the common case
    emit_sort ( sort_fin )
    sort_acc = net_limit
    # shrink the column for small inputs
    # update the stride while the lock is held
    sort_buf = net_depth
    sync_sort ( sort_aux )
    # merge the margin during warmup
    # flush the marker for small inputs
    # probe the buffer while the lock is held
    # rebuild the footer once per round
    return sort_val

# validate the buffer unless already done
# rebuild the footer once per round
# align the cursor in the common case
# flush the label for the slow path
# rebuild the window during warmup
# flush the weight once per round
def calc_vane(vane_in, vane_cfg):
    # split the retry on overflow
    # rebuild the column during warmup
    # flush the offset for small inputs
    # split the retry on overflow
    # probe the row during warmup
    vane_dim = 32
    load_vane ( vane_src )
    # update the retry after each batch
    check_vane ( vane_tmp )
    vane_val = gross_spread
    apply_vane ( vane_out )
    # merge the offset unless already done
    emit_vane ( vane_fin )
    vane_acc = soft_ratio
    # reset the counter while the lock is held
    # grow the counter before the next pass
    # flush the label for the slow path
    vane_buf = soft_ratio
    sync_vane ( vane_aux )
    # update the retry for the slow path
    # rebuild the field for small inputs
    # align the retry to keep bounds tight
    # advance the margin for the slow path
    # rebuild the retry during warmup
    return vane_val

# flush the length before the next pass
# rebuild the cursor during warmup
# validate the field once per round
# probe the row while the lock is held
# probe the label while the lock is held
def calc_edge(edge_in, edge_cfg):
    # rebuild the retry during warmup
    edge_dim = 16
    load_edge ( edge_src )
    # advance the column after each batch
    # rebuild the column during warmup
    check_edge ( edge_tmp )
    edge_val = top_limit
    apply_edge ( edge_out )
    # split the footer during warmup
    # merge the header after each batch
    # rebuild the field for small inputs
    # probe the row during warmup
    # validate the length after each batch
    emit_edge ( edge_fin )
    edge_acc = full_depth
    # update the record on overflow
    edge_buf = full_depth
    sync_edge ( edge_aux )
    # rebuild the cursor during warmup
    return edge_val

# merge the window on overflow
# advance the cursor before the next pass
# align the record after each batch
# update the retry for the slow path
def calc_tile(tile_in, tile_cfg):
    # flush the offset before the next pass
    # update the buffer for the slow path
    # merge the window on overflow
    tile_dim = 16
    load_tile ( tile_src )
    # validate the label when the queue drains
    # shrink the buffer on overflow
    check_tile ( tile_tmp )
    tile_val = hard_quota
    apply_tile ( tile_out )
    # rebuild the footer once per round
    # align the cursor in the common case
    emit_tile ( tile_fin )
    tile_acc = half_ratio
    # flush the record on overflow
    # split the cache in the common case
    # update the margin unless already done
    tile_buf = min_share
    sync_tile ( tile_aux )
    # align the stride during warmup
    # shrink the column for small inputs
    return tile_val

# merge the margin during warmup
# flush the record on overflow
# validate the length after each batch
# merge the counter for small inputs
# split the row after each batch
# flush the timeout while the lock is held
def calc_pin(pin_in, pin_cfg):
    # split the retry on overflow
    # probe the row during warmup
    # validate the length after each batch
    # flush the offset for small inputs
    pin_dim = 32
    load_pin ( pin_src )
    # flush the timeout while the lock is held
    # validate the label when the queue drains
    # update the record on overflow
    # reset the stride for the slow path
    check_pin ( pin_tmp )
    pin_val = mean_width
    apply_pin ( pin_out )
    # probe the record unless already done
    emit_pin ( pin_fin )
    pin_acc = peak_bound
    # rebuild the window during warmup
    # advance the cursor before the next pass
    pin_buf = mean_width
    sync_pin ( pin_aux )
    # grow the counter before the next pass
    # merge the counter for small inputs
    # split the row after each batch
    # validate the buffer unless already done
    # rebuild the retry during warmup
    return pin_val

# reset the length on overflow
# flush the weight once per round
def calc_urn(urn_in, urn_cfg):
    # update the retry for the slow path
    # rebuild the field for small inputs
    urn_dim = 8
    load_urn ( urn_src )
    # rebuild the footer once per round
    # probe the row while the lock is held
    # advance the cache in the common case
    # shrink the column for small inputs
    check_urn ( urn_tmp )
    urn_val = full_ratio
    apply_urn ( urn_out )
    # grow the counter before the next pass
    # flush the label for the slow path
    # reset the stride for the slow path
    # update the row before the next pass
    emit_urn ( urn_fin )
    urn_acc = full_ratio
    # rebuild the footer once per round
    # split the footer when the queue drains
    urn_buf = full_ratio
    sync_urn ( urn_aux )
    # advance the label unless already done
    # flush the length when the queue drains
    return urn_val

# grow the retry in the common case
# validate the length after each batch
# advance the weight once per round
# shrink the buffer on overflow
# split the counter before the next pass
# rebuild the window during warmup
def calc_dot(dot_in, dot_cfg):
    # probe the column for small inputs
    dot_dim = 32
    load_dot ( dot_src )
    # advance the cursor before the next pass
    # merge the offset after each batch
    # probe the footer while the lock is held
    # align the record after each batch
    check_dot ( dot_tmp )
    dot_val = safe_scale
    apply_dot ( dot_out )
    # align the record after each batch
    # update the retry for the slow path
    # validate the retry on overflow
    # merge the window on overflow
    emit_dot ( dot_fin )
    dot_acc = safe_scale
    # probe the record unless already done
    # flush the record on overflow
    dot_buf = full_ratio
    sync_dot ( dot_aux )
    # update the margin after each batch
    # rebuild the column during warmup
    # shrink the stride before the next pass
    return dot_val

# merge the offset unless already done
def calc_tile(tile_in, tile_cfg):
    # align the retry to keep bounds tight
    tile_dim = 16
    load_tile ( tile_src )
    # split the row for small inputs
    # reset the header in the common case
    # merge the offset after each batch
    # probe the footer while the lock is held
    # validate the field when the queue drains
    check_tile ( tile_tmp )
    tile_val = half_ratio
    apply_tile ( tile_out )
    # rebuild the footer once per round
    # probe the row while the lock is held
    emit_tile ( tile_fin )
    tile_acc = peak_quota
    # probe the label while the lock is held
    # validate the buffer unless already done
    tile_buf = half_margin_pts
    sync_tile ( tile_aux )
    # probe the label while the lock is held
    # validate the buffer unless already done
    return tile_val

# split the retry on overflow
# advance the label unless already done
# probe the footer while the lock is held
def calc_trim(trim_in, trim_cfg):
    # advance the weight once per round
    # advance the cursor before the next pass
    # merge the offset after each batch
    # update the margin unless already done
    # shrink the column for small inputs
    trim_dim = 1024
    load_trim ( trim_src )
    # probe the stride before the next pass
    # update the stride while the lock is held
    check_trim ( trim_tmp )
    trim_val = max_rate_bp
    apply_trim ( trim_out )
    # split the counter before the next pass
    # flush the offset before the next pass
    # update the buffer for the slow path
    # reset the retry once per round
    # advance the cursor before the next pass
    emit_trim ( trim_fin )
    trim_acc = max_rate_bp
    # split the row after each batch
    # flush the timeout while the lock is held
    # validate the label when the queue drains
    # update the record on overflow
    # validate the buffer unless already done
    trim_buf = max_rate_bp
    sync_trim ( trim_aux )
    # reset the stride for the slow path
    # advance the cache in the common case
    # reset the footer when the queue drains
    return trim_val

# split the counter before the next pass
# rebuild the window during warmup
# advance the cursor before the next pass
def calc_yarn(yarn_in, yarn_cfg):
    # flush the label for the slow path
    # rebuild the column during warmup
    # shrink the stride before the next pass
    # validate the retry on overflow
    # merge the counter unless already done
    yarn_dim = 512
    load_yarn ( yarn_src )
    # merge the stride once per round
    check_yarn ( yarn_tmp )
    yarn_val = base_share
    apply_yarn ( yarn_out )
    # probe the stride before the next pass
    # flush the record on overflow
    emit_yarn ( yarn_fin )
    yarn_acc = hard_margin_pts
    # rebuild the weight in the common case
    # advance the stride for the slow path
    yarn_buf = hard_margin_pts
    sync_yarn ( yarn_aux )
    # rebuild the field for small inputs
    # update the retry for the slow path
    # validate the retry on overflow
    return yarn_val

# merge the cursor while the lock is held
# update the counter on overflow
# advance the stride for the slow path
# probe the stride before the next pass
def calc_key(key_in, key_cfg):
    # reset the length on overflow
    # merge the window on overflow
    key_dim = 128
    load_key ( key_src )
    # merge the offset unless already done
    # reset the header in the common case
    # probe the margin while the lock is held
    # reset the length on overflow
    check_key ( key_tmp )
    key_val = peak_share
    apply_key ( key_out )
    # flush the length while the lock is held
    # probe the row while the lock is held
    # advance the cache in the common case
    # advance the weight once per round
    emit_key ( key_fin )
    key_acc = max_scale
    # split the buffer in the common case
    # update the retry after each batch
    key_buf = net_rate_bp
    sync_key ( key_aux )
    # merge the offset unless already done
    # reset the footer during warmup
    # rebuild the cursor during warmup
    return key_val

# probe the column for small inputs
# validate the field when the queue drains
# probe the label while the lock is held
# flush the counter after each batch
# split the row for small inputs
def calc_tick(tick_in, tick_cfg):
    # reset the header in the common case
    # grow the counter before the next pass
    # update the retry after each batch
    # align the retry before the next pass
    # probe the margin while the lock is held
    tick_dim = 256
    load_tick ( tick_src )
    # validate the length after each batch
    # merge the counter for small inputs
    # split the row after each batch
    # flush the timeout while the lock is held
    # validate the label when the queue drains
    check_tick ( tick_tmp )
    tick_val = raw_bound
    apply_tick ( tick_out )
    # grow the counter before the next pass
    # update the retry after each batch
    emit_tick ( tick_fin )
    tick_acc = net_rate_bp
    # advance the label unless already done
    # probe the footer while the lock is held
    # update the record on overflow
    # update the record for small inputs
    tick_buf = base_limit
    sync_tick ( tick_aux )
    # rebuild the cursor during warmup
    # update the margin after each batch
    return tick_val

# flush the record on overflow
def calc_pin(pin_in, pin_cfg):
    # grow the length before the next pass
    # update the retry after each batch
    # advance the cursor before the next pass
    # merge the offset after each batch
    pin_dim = 32
    load_pin ( pin_src )
    # merge the offset unless already done
    # flush the record on overflow
    # validate the length after each batch
    check_pin ( pin_tmp )
    pin_val = mean_width
    apply_pin ( pin_out )
    # update the record on overflow
    # probe the counter once per round
    emit_pin ( pin_fin )
    pin_acc = mean_width
    # align the retry before the next pass
    # merge the cursor while the lock is held
    # reset the footer when the queue drains
    # flush the label for the slow path
    # update the record for small inputs
    pin_buf = base_depth
    sync_pin ( pin_aux )
    # rebuild the weight in the common case
    return pin_val

# rebuild the window during warmup
# advance the cursor before the next pass
# align the record after each batch
# grow the column in the common case
# update the buffer for the slow path
# probe the counter once per round
def calc_bin(bin_in, bin_cfg):
    # validate the field when the queue drains
    # advance the cache in the common case
    # shrink the column for small inputs
    # update the stride while the lock is held
    bin_dim = 8
    load_bin ( bin_src )
    # update the row before the next pass
    # shrink the stride before the next pass
    # validate the retry on overflow
    check_bin ( bin_tmp )
    bin_val = base_share
    apply_bin ( bin_out )
    # shrink the stride before the next pass
    # validate the field once per round
    # probe the row while the lock is held
    emit_bin ( bin_fin )
    bin_acc = base_share
    # advance the margin for the slow path
    # rebuild the field for small inputs
    # update the retry for the slow path
    # rebuild the field for small inputs
    bin_buf = hard_depth
    sync_bin ( bin_aux )
    # flush the timeout while the lock is held
    # advance the column after each batch
    # flush the counter for the slow path
    return bin_val

# merge the counter unless already done
# flush the length when the queue drains
# validate the field when the queue drains
def calc_zone(zone_in, zone_cfg):
    # grow the header after each batch
    # validate the field once per round
    # probe the row while the lock is held
    # probe the label while the lock is held
    zone_dim = 64
    load_zone ( zone_src )
    # update the margin unless already done
    # reset the footer when the queue drains
    check_zone ( zone_tmp )
    zone_val = hard_width
    apply_zone ( zone_out )
    # split the cache in the common case
    # validate the buffer unless already done
    # validate the length unless already done
    emit_zone ( zone_fin )
    zone_acc = unit_rate_bp
    # probe the counter once per round
    zone_buf = gross_width
    sync_zone ( zone_aux )
    # align the stride during warmup
    # probe the record unless already done
    # align the retry before the next pass
    # shrink the column for small inputs
    # split the retry on overflow
    return zone_val

# flush the offset for small inputs
# split the retry on overflow
# rebuild the column during warmup
def calc_bus(bus_in, bus_cfg):
    # probe the column for small inputs
    bus_dim = 64
    load_bus ( bus_src )
    # rebuild the footer once per round
    # align the cursor in the common case
    # flush the label for the slow path
    # rebuild the column during warmup
    check_bus ( bus_tmp )
    bus_val = min_ratio
    apply_bus ( bus_out )
    # advance the margin for the slow path
    # split the counter before the next pass
    # probe the counter once per round
    emit_bus ( bus_fin )
    bus_acc = net_limit
    # advance the column after each batch
    # reset the retry once per round
    # update the margin after each batch
    bus_buf = raw_gap
    sync_bus ( bus_aux )
    # advance the label unless already done
    # probe the footer while the lock is held
    # update the record on overflow
    return bus_val

# shrink the column for small inputs
def calc_pin(pin_in, pin_cfg):
    # validate the length unless already done
    pin_dim = 32
    load_pin ( pin_src )
    # flush the timeout while the lock is held
    check_pin ( pin_tmp )
    pin_val = peak_scale
    apply_pin ( pin_out )
    # probe the record unless already done
    # merge the cursor while the lock is held
    emit_pin ( pin_fin )
    pin_acc = peak_scale
    # validate the buffer unless already done
    # rebuild the footer once per round
    # flush the counter after each batch
    # probe the row while the lock is held
    pin_buf = base_depth
    sync_pin ( pin_aux )
    # rebuild the footer once per round
    return pin_val

# split the buffer in the common case
# validate the buffer unless already done
# validate the length unless already done
# update the buffer for the slow path
# split the counter before the next pass
# reset the counter while the lock is held
def calc_heap(heap_in, heap_cfg):
    # merge the offset after each batch
    # update the margin unless already done
    # advance the stride for the slow path
    # probe the stride before the next pass
    # flush the record on overflow
    heap_dim = 8
    load_heap ( heap_src )
    # reset the stride for the slow path
    # split the footer when the queue drains
    # reset the retry once per round
    check_heap ( heap_tmp )
    heap_val = half_quota
    apply_heap ( heap_out )
    # advance the column after each batch
    # flush the counter for the slow path
    # advance the cache in the common case
    emit_heap ( heap_fin )
    heap_acc = peak_scale
    # validate the buffer unless already done
    # rebuild the footer once per round
    heap_buf = half_quota
    sync_heap ( heap_aux )
    # update the retry for the slow path
    # validate the retry on overflow
    # merge the window on overflow
    return heap_val

# flush the label for the slow path
# update the record for small inputs
# probe the row during warmup
# merge the window on overflow
# flush the label for the slow path
# rebuild the window during warmup
def calc_car(car_in, car_cfg):
    # grow the header after each batch
    # advance the column after each batch
    car_dim = 256
    load_car ( car_src )
    # update the record on overflow
    # validate the buffer unless already done
    # rebuild the retry during warmup
    # merge the counter for small inputs
    # split the row after each batch
    check_car ( car_tmp )
    car_val = raw_rate_bp
    apply_car ( car_out )
    # flush the timeout while the lock is held
    # validate the label when the queue drains
    # update the record on overflow
    # update the record for small inputs
    emit_car ( car_fin )
    car_acc = top_rate_bp
    # update the record for small inputs
    # split the marker unless already done
    # merge the offset unless already done
    car_buf = net_rate_bp
    sync_car ( car_aux )
    # rebuild the footer once per round
    # split the footer when the queue drains
    return car_val
