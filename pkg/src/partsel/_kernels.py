"""Low-level instrumented partitioning kernels.

All kernels operate on a 1-based int64 buffer (slot 0 is unused padding) so
that index arithmetic matches the classical l..r inclusive convention used
throughout the package.  Every kernel threads two pieces of instrumentation:

* ``cnt`` -- an int64 array of six counters, see the ``C_*`` constants;
* ``trace`` -- an int64 (cap, 3) array of executed swaps ``(i, j, phase)``.
  Passing a zero-capacity array disables recording.  Kernels return the
  number of trace rows written.

Counting conventions:

* a three-way probe of one key against the pivot costs one key comparison;
  binary schemes pay one key comparison per two-way probe;
* every executed index test (``i < j`` and friends) costs one index
  comparison;
* a swap with ``i == j`` is executed and counted (also as vacuous);
* a vector swap of ``d`` element pairs counts ``d`` swaps.

The functions are written in numba-compatible form and are jit-compiled when
numba is importable; otherwise the same source runs interpreted.
"""

C_KEY = 0
C_IDX = 1
C_SWAP = 2
C_VAC = 3
C_SPUR = 4
C_PART = 5

PH_LOOP = 0
PH_EQL = 1
PH_EQR = 2
PH_CLEAN = 3


def _sw(x, i, j, cnt, trace, t, phase):
    """Exchange x[i] and x[j], counting (and recording) the swap."""
    tmp = x[i]
    x[i] = x[j]
    x[j] = tmp
    cnt[C_SWAP] += 1
    if i == j:
        cnt[C_VAC] += 1
    if t < trace.shape[0]:
        trace[t, 0] = i
        trace[t, 1] = j
        trace[t, 2] = phase
        t += 1
    return t


def _vsw(x, a, b, c, cnt, trace, t, phase):
    """Exchange the blocks x[a:b] and x[b+1:c] (d = min(b+1-a, c-b) pairs)."""
    d = b + 1 - a
    if c - b < d:
        d = c - b
    for m in range(d):
        t = _sw(x, a + m, c - m, cnt, trace, t, phase)
    return t


def _c3(key, v, cnt):
    """Three-way probe of one key against the pivot: -1 / 0 / +1."""
    cnt[C_KEY] += 1
    if key < v:
        return -1
    if key > v:
        return 1
    return 0


# ---------------------------------------------------------------------------
# binary schemes
# ---------------------------------------------------------------------------


def _sbs(x, l, r, cnt, trace):
    """Safeguarded binary scheme. Pivot at x[l]; returns (a, b,#trace)."""
    t = 0
    v = x[l]
    i = l
    p = i + 1
    j = r
    q = j - 1
    # initial probe of x[r]; one three-way comparison
    c = _c3(x[j], v, cnt)
    if c < 0:  # v > x[r]
        t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
        p = i
    elif c > 0:  # v < x[r]
        q = j
    while True:
        i += 1
        while _c3(x[i], v, cnt) < 0:
            i += 1
        j -= 1
        while _c3(x[j], v, cnt) > 0:
            j -= 1
        cnt[C_IDX] += 1
        if i < j:
            t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
            continue
        cnt[C_IDX] += 1
        if i == j:
            i += 1
            j -= 1
        break
    a = l + j - p + 1
    b = r - q + i - 1
    cnt[C_IDX] += 1
    if l < p:
        t = _sw(x, l, j, cnt, trace, t, PH_CLEAN)
    cnt[C_IDX] += 1
    if q < r:
        t = _sw(x, i, r, cnt, trace, t, PH_CLEAN)
    cnt[C_PART] += 1
    return a, b, t


def _sbind1(x, l, r, cnt, trace):
    """Single-index-controlled binary scheme (with the a/b cleanup)."""
    t = 0
    v = x[l]
    i = l
    j = r + 1
    while True:
        i += 1
        while True:
            cnt[C_IDX] += 1
            if i > r:
                break
            cnt[C_KEY] += 1
            if x[i] >= v:
                break
            i += 1
        j -= 1
        while _c3(x[j], v, cnt) > 0:
            j -= 1
        cnt[C_IDX] += 1
        if i < j:
            t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
            continue
        cnt[C_IDX] += 1
        if i == j:
            i += 1
            j -= 1
        break
    a = j
    b = i - 1
    t = _sw(x, l, j, cnt, trace, t, PH_CLEAN)
    cnt[C_PART] += 1
    return a, b, t


def _sbind2(x, l, r, cnt, trace):
    """Double-index-controlled binary scheme; exactly n-1 key comparisons."""
    t = 0
    v = x[l]
    i = l + 1
    j = r
    while True:
        while True:
            cnt[C_IDX] += 1
            if i > j:
                break
            cnt[C_KEY] += 1
            if x[i] >= v:
                break
            i += 1
        while True:
            cnt[C_IDX] += 1
            if i >= j:
                break
            cnt[C_KEY] += 1
            if x[j] <= v:
                break
            j -= 1
        cnt[C_IDX] += 1
        if i >= j:
            break
        t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
        i += 1
        j -= 1
    # at exit j is i - 1 or i; the scans collapse both cases to i - 1
    j = i - 1
    a = j
    b = j
    t = _sw(x, l, j, cnt, trace, t, PH_CLEAN)
    cnt[C_PART] += 1
    return a, b, t


def _sbl(x, l, r, cnt, trace):
    """Lomuto's binary scheme; n-1 comparisons, up to n-1 loop swaps."""
    t = 0
    v = x[l]
    i = l + 1
    p = l
    while True:
        cnt[C_IDX] += 1
        if i > r:
            break
        cnt[C_KEY] += 1
        if x[i] < v:
            p += 1
            t = _sw(x, p, i, cnt, trace, t, PH_LOOP)
        i += 1
    t = _sw(x, l, p, cnt, trace, t, PH_CLEAN)
    cnt[C_PART] += 1
    return p, p, t


def _sbs_tuned(x, lbar, rbar, cnt, trace):
    """Tuned safeguarded scheme over x[lbar:rbar], pivot at x[lbar].

    Requires a stopper >= v somewhere in x[lbar+1:] (the tuned layout's
    right sample block, or an interior key for the pivot-only s=1 plan).
    Also covers the tuned single-index scheme, which reduces to this.
    """
    t = 0
    v = x[lbar]
    i = lbar
    j = rbar + 1
    while True:
        i += 1
        while _c3(x[i], v, cnt) < 0:
            i += 1
        j -= 1
        while _c3(x[j], v, cnt) > 0:
            j -= 1
        cnt[C_IDX] += 1
        if i < j:
            t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
            continue
        cnt[C_IDX] += 1
        if i == j:
            i += 1
            j -= 1
        break
    a = j
    b = i - 1
    t = _sw(x, lbar, j, cnt, trace, t, PH_CLEAN)
    cnt[C_PART] += 1
    return a, b, t


# ---------------------------------------------------------------------------
# ternary schemes
# ---------------------------------------------------------------------------


def _sts_core(x, v, i, j, p, q, lo, hi, rguard, cnt, trace, t):
    """Shared scan/exchange loop of the safeguarded and single-index
    ternary schemes.  ``rguard < 0`` scans without an index test (a
    stopper >= v must exist); otherwise the upward scan tests i <= rguard.
    ``lo``/``hi`` are the cleanup bounds (l/r untuned, lbar/rbar tuned).
    """
    while True:
        i += 1
        if rguard < 0:
            ci = _c3(x[i], v, cnt)
            while ci < 0:
                i += 1
                ci = _c3(x[i], v, cnt)
        else:
            ci = 1
            while True:
                cnt[C_IDX] += 1
                if i > rguard:
                    break
                ci = _c3(x[i], v, cnt)
                if ci < 0:
                    i += 1
                    ci = 1
                    continue
                break
        j -= 1
        cj = _c3(x[j], v, cnt)
        while cj > 0:
            j -= 1
            cj = _c3(x[j], v, cnt)
        cnt[C_IDX] += 1
        if i < j:
            t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
            # after the exchange, x[i] carries the key probed as cj
            # and x[j] the key probed as ci
            if cj == 0:
                t = _sw(x, i, p, cnt, trace, t, PH_EQL)
                p += 1
            if ci == 0:
                t = _sw(x, j, q, cnt, trace, t, PH_EQR)
                q -= 1
            continue
        cnt[C_IDX] += 1
        if i == j:
            i += 1
            j -= 1
        break
    a = lo + j - p + 1
    b = hi - q + i - 1
    t = _vsw(x, lo, p - 1, j, cnt, trace, t, PH_CLEAN)
    t = _vsw(x, i, q, hi, cnt, trace, t, PH_CLEAN)
    cnt[C_PART] += 1
    return a, b, t


def _sts(x, l, r, cnt, trace):
    """Safeguarded ternary scheme. Pivot at x[l]."""
    t = 0
    v = x[l]
    i = l
    p = i + 1
    j = r
    q = j - 1
    c = _c3(x[j], v, cnt)
    if c < 0:  # v > x[r]
        t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
        p = i
    elif c > 0:  # v < x[r]
        q = j
    return _sts_core(x, v, i, j, p, q, l, r, -1, cnt, trace, t)


def _stind1(x, l, r, cnt, trace):
    """Single-index-controlled ternary scheme. Pivot at x[l]."""
    v = x[l]
    return _sts_core(x, v, l, r + 1, l + 1, r, l, r, r, cnt, trace, 0)


def _sts_tuned(x, lbar, p, q, rbar, cnt, trace):
    """Tuned safeguarded/single-index ternary scheme over a prepared
    layout: x[lbar:p-1] = v (pivot at x[p-1]), x[q+1:rbar] = v."""
    v = x[p - 1]
    return _sts_core(x, v, p - 1, q + 1, p, q, lbar, rbar, -1, cnt, trace, 0)


def _stind2_core(x, v, i, j, p, q, lo, hi, prime, cnt, trace, t):
    """Double-index-controlled ternary loop (Bentley-McIlroy style).

    ``prime`` switches the downward scan to its i <= j variant, which makes
    one extra (spurious) comparison whenever the scans meet at i == j.
    """
    while True:
        # upward scan, equal keys parked at the left end
        while True:
            cnt[C_IDX] += 1
            if i <= j:
                c = _c3(x[i], v, cnt)
                if c < 0:
                    i += 1
                    continue
                if c == 0:
                    t = _sw(x, p, i, cnt, trace, t, PH_EQL)
                    p += 1
                    i += 1
                    continue
            break
        # downward scan, equal keys parked at the right end
        done = False
        if prime:
            while True:
                cnt[C_IDX] += 1
                if i <= j:
                    if i == j:
                        cnt[C_SPUR] += 1
                    c = _c3(x[j], v, cnt)
                    if c > 0:
                        j -= 1
                        continue
                    if c == 0:
                        t = _sw(x, j, q, cnt, trace, t, PH_EQR)
                        j -= 1
                        q -= 1
                        continue
                cnt[C_IDX] += 1
                if i >= j:
                    done = True
                break
        else:
            while True:
                cnt[C_IDX] += 1
                if i < j:
                    c = _c3(x[j], v, cnt)
                    if c > 0:
                        j -= 1
                        continue
                    if c == 0:
                        t = _sw(x, j, q, cnt, trace, t, PH_EQR)
                        j -= 1
                        q -= 1
                        continue
                cnt[C_IDX] += 1
                if i >= j:
                    j = i - 1
                    done = True
                break
        if done:
            break
        t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
        i += 1
        j -= 1
    a = lo + i - p
    b = hi - q + j
    t = _vsw(x, lo, p - 1, j, cnt, trace, t, PH_CLEAN)
    t = _vsw(x, i, q, hi, cnt, trace, t, PH_CLEAN)
    cnt[C_PART] += 1
    return a, b, t


def _stind2(x, l, r, prime, cnt, trace):
    v = x[l]
    return _stind2_core(x, v, l + 1, r, l + 1, r, l, r, prime, cnt, trace, 0)


def _stind2_tuned(x, lbar, p, q, rbar, prime, cnt, trace):
    v = x[p - 1]
    return _stind2_core(x, v, p, q, p, q, lbar, rbar, prime, cnt, trace, 0)


def _stl_core(x, v, i, pb, qhi, lo, rbar, cnt, trace, t):
    """Lomuto-style ternary loop over x[i:qhi]; equal keys kept in a block
    that trails the growing "< v" block."""
    p = pb
    while True:
        cnt[C_IDX] += 1
        if i > qhi:
            break
        c = _c3(x[i], v, cnt)
        if c < 0:
            p += 1
            t = _sw(x, p, i, cnt, trace, t, PH_LOOP)
        elif c == 0:
            pb += 1
            p += 1
            t = _sw(x, p, i, cnt, trace, t, PH_LOOP)
            t = _sw(x, pb, p, cnt, trace, t, PH_EQL)
        i += 1
    a = lo + p - pb
    b = p - qhi + rbar
    t = _vsw(x, lo, pb, p, cnt, trace, t, PH_CLEAN)
    t = _vsw(x, p + 1, qhi, rbar, cnt, trace, t, PH_CLEAN)
    cnt[C_PART] += 1
    return a, b, t


def _stl(x, l, r, cnt, trace):
    v = x[l]
    return _stl_core(x, v, l + 1, l, r, l, r, cnt, trace, 0)


def _stl_tuned(x, lbar, p, q, rbar, cnt, trace):
    v = x[p - 1]
    return _stl_core(x, v, p, p - 1, q, lbar, rbar, cnt, trace, 0)


def _sth_core(x, v, i, j, lo, hi, alt, ind2, cnt, trace):
    """Hybrid ternary schemes sharing one skeleton.

    ``alt`` selects the halting-problem-free first stage (safe with no key
    > v present); ``ind2`` selects the index-controlled second stage that
    makes exactly n-1 key comparisons instead of using stoppers.
    """
    t = 0
    q = j
    p = i
    stage2 = False
    finished = False
    ci = 0
    cj = 0
    if not alt:
        # first stage: skip equals from both ends, then dispatch on the
        # first non-equal key seen on each side
        while True:
            cnt[C_IDX] += 1
            if i <= j:
                ci = _c3(x[i], v, cnt)
                if ci == 0:
                    i += 1
                    continue
            break
        p = i
        cnt[C_IDX] += 1
        if i == j:
            if ci < 0:
                i = j + 1
            else:
                j = i - 1
            finished = True
        else:
            cnt[C_IDX] += 1
            if i >= j:
                finished = True
        if not finished:
            while True:
                cnt[C_IDX] += 1
                if i < j:
                    cj = _c3(x[j], v, cnt)
                    if cj == 0:
                        j -= 1
                        continue
                break
            q = j
            cnt[C_IDX] += 1
            if i == j:
                if ci < 0:
                    i = j + 1
                else:
                    j = i - 1
                finished = True
        if not finished:
            if ci < 0 and cj < 0:
                # advance i over keys <= v until a key > v shows up
                while True:
                    i += 1
                    cnt[C_IDX] += 1
                    if i < j:
                        ci = _c3(x[i], v, cnt)
                        if ci < 0:
                            continue
                        if ci == 0:
                            t = _sw(x, p, i, cnt, trace, t, PH_EQL)
                            p += 1
                            continue
                        t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
                        stage2 = True
                    else:
                        i = j + 1
                    break
            elif ci > 0 and cj > 0:
                # advance j over keys >= v until a key < v shows up
                while True:
                    j -= 1
                    cnt[C_IDX] += 1
                    if i < j:
                        cj = _c3(x[j], v, cnt)
                        if cj > 0:
                            continue
                        if cj == 0:
                            t = _sw(x, j, q, cnt, trace, t, PH_EQR)
                            q -= 1
                            continue
                        t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
                        stage2 = True
                    else:
                        j = i - 1
                    break
            elif ci > 0 and cj < 0:
                t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
                stage2 = True
            else:  # x[i] < v < x[j]: the scans may start right away
                stage2 = True
    else:
        # halting-problem-free first stage: park equals on the left while
        # scanning up, then on the right while scanning down
        while True:
            cnt[C_IDX] += 1
            if i <= j:
                ci = _c3(x[i], v, cnt)
                if ci == 0:
                    i += 1
                    continue
            break
        p = i
        cnt[C_IDX] += 1
        if i <= j and ci < 0:
            i += 1
            while True:
                cnt[C_IDX] += 1
                if i <= j:
                    ci = _c3(x[i], v, cnt)
                    if ci < 0:
                        i += 1
                        continue
                    if ci == 0:
                        t = _sw(x, p, i, cnt, trace, t, PH_EQL)
                        p += 1
                        i += 1
                        continue
                break
        probed = False
        while True:
            cnt[C_IDX] += 1
            if i < j:
                cj = _c3(x[j], v, cnt)
                probed = True
                if cj == 0:
                    j -= 1
                    probed = False
                    continue
            break
        q = j
        if probed:
            if cj > 0:
                j -= 1
                while True:
                    cnt[C_IDX] += 1
                    if i < j:
                        cj = _c3(x[j], v, cnt)
                        if cj > 0:
                            j -= 1
                            continue
                        if cj == 0:
                            t = _sw(x, j, q, cnt, trace, t, PH_EQR)
                            j -= 1
                            q -= 1
                            continue
                        t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
                        stage2 = True
                    else:
                        j = i - 1
                    break
            else:  # x[j] < v < x[i]
                t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
                stage2 = True
        else:
            j = i - 1
    if stage2:
        if not ind2:
            # stopper-guarded scans; two extra comparisons overall
            while True:
                while True:
                    i += 1
                    ci = _c3(x[i], v, cnt)
                    if ci < 0:
                        continue
                    if ci == 0:
                        t = _sw(x, p, i, cnt, trace, t, PH_EQL)
                        p += 1
                        continue
                    break
                while True:
                    j -= 1
                    cj = _c3(x[j], v, cnt)
                    if cj > 0:
                        continue
                    if cj == 0:
                        t = _sw(x, j, q, cnt, trace, t, PH_EQR)
                        q -= 1
                        continue
                    break
                cnt[C_IDX] += 1
                if i < j:
                    t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
                    continue
                break
        else:
            # index-controlled scans; exactly n-1 key comparisons
            i += 1
            j -= 1
            while True:
                while True:
                    cnt[C_IDX] += 1
                    if i <= j:
                        ci = _c3(x[i], v, cnt)
                        if ci < 0:
                            i += 1
                            continue
                        if ci == 0:
                            t = _sw(x, p, i, cnt, trace, t, PH_EQL)
                            p += 1
                            i += 1
                            continue
                    break
                br = False
                while True:
                    cnt[C_IDX] += 1
                    if i < j:
                        cj = _c3(x[j], v, cnt)
                        if cj > 0:
                            j -= 1
                            continue
                        if cj == 0:
                            t = _sw(x, j, q, cnt, trace, t, PH_EQR)
                            j -= 1
                            q -= 1
                            continue
                    cnt[C_IDX] += 1
                    if i >= j:
                        j = i - 1
                        br = True
                    break
                if br:
                    break
                t = _sw(x, i, j, cnt, trace, t, PH_LOOP)
                i += 1
                j -= 1
    a = lo + i - p
    b = hi - q + j
    t = _vsw(x, lo, p - 1, j, cnt, trace, t, PH_CLEAN)
    t = _vsw(x, i, q, hi, cnt, trace, t, PH_CLEAN)
    cnt[C_PART] += 1
    return a, b, t


def _sth(x, l, r, alt, ind2, cnt, trace):
    v = x[l]
    return _sth_core(x, v, l + 1, r, l, r, alt, ind2, cnt, trace)


def _sth_tuned(x, lbar, p, q, rbar, alt, ind2, cnt, trace):
    v = x[p - 1]
    return _sth_core(x, v, p, q, lbar, rbar, alt, ind2, cnt, trace)


# ---------------------------------------------------------------------------
# optional jit compilation (same source runs interpreted without numba)
# ---------------------------------------------------------------------------

try:  # pragma: no cover - exercised implicitly by every kernel call
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

if HAVE_NUMBA:
    _sw = _njit(cache=True)(_sw)
    _vsw = _njit(cache=True)(_vsw)
    _c3 = _njit(cache=True)(_c3)
    _sbs = _njit(cache=True)(_sbs)
    _sbind1 = _njit(cache=True)(_sbind1)
    _sbind2 = _njit(cache=True)(_sbind2)
    _sbl = _njit(cache=True)(_sbl)
    _sbs_tuned = _njit(cache=True)(_sbs_tuned)
    _sts_core = _njit(cache=True)(_sts_core)
    _sts = _njit(cache=True)(_sts)
    _stind1 = _njit(cache=True)(_stind1)
    _sts_tuned = _njit(cache=True)(_sts_tuned)
    _stind2_core = _njit(cache=True)(_stind2_core)
    _stind2 = _njit(cache=True)(_stind2)
    _stind2_tuned = _njit(cache=True)(_stind2_tuned)
    _stl_core = _njit(cache=True)(_stl_core)
    _stl = _njit(cache=True)(_stl)
    _stl_tuned = _njit(cache=True)(_stl_tuned)
    _sth_core = _njit(cache=True)(_sth_core)
    _sth = _njit(cache=True)(_sth)
    _sth_tuned = _njit(cache=True)(_sth_tuned)
