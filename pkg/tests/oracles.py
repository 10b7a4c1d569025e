"""Naive reference implementations used as independent test oracles.

Everything here is a deliberate straight-line transcription of the
definitions, written with per-pixel loops and explicit DFT matrices, and
imports nothing from the production package.
"""

import numpy as np

VAR_EPS = 1e-12


# ---------------------------------------------------------------------------
# padding and windowed statistics

def reflect_index(i, n):
    while i < 0 or i >= n:
        if i < 0:
            i = -i
        if i >= n:
            i = 2 * (n - 1) - i
    return i


def mirror_pad(field, margin=1):
    h, w = field.shape
    out = np.empty((h + 2 * margin, w + 2 * margin))
    for i in range(out.shape[0]):
        for j in range(out.shape[1]):
            out[i, j] = field[reflect_index(i - margin, h), reflect_index(j - margin, w)]
    return out


def window(padded, i, j):
    return padded[i:i + 3, j:j + 3]


def naive_rms_contrast(field):
    h, w = field.shape
    padded = mirror_pad(field)
    out = np.empty((h, w))
    for i in range(h):
        for j in range(w):
            win = window(padded, i, j)
            mu = win.sum() / 9.0
            out[i, j] = np.sqrt(((win - mu) ** 2).sum() / 9.0)
    return out


SCHARR_X = np.array([[-3, 0, 3], [-10, 0, 10], [-3, 0, 3]], dtype=float) / 16.0
SCHARR_Y = SCHARR_X.T


def naive_scharr(field):
    h, w = field.shape
    padded = mirror_pad(field)
    gx = np.empty((h, w))
    gy = np.empty((h, w))
    for i in range(h):
        for j in range(w):
            win = window(padded, i, j)
            gx[i, j] = (win * SCHARR_X).sum()
            gy[i, j] = (win * SCHARR_Y).sum()
    return gx, gy


def naive_orientation(gx, gy):
    h, w = gx.shape
    out = np.empty((h, w))
    for i in range(h):
        for j in range(w):
            x = 0.0 if abs(gx[i, j]) < 1e-12 else gx[i, j]
            y = 0.0 if abs(gy[i, j]) < 1e-12 else gy[i, j]
            out[i, j] = np.arctan2(y, x)
    return out


def naive_local_pearson(a, b):
    h, w = a.shape
    pa, pb = mirror_pad(a), mirror_pad(b)
    out = np.empty((h, w))
    for i in range(h):
        for j in range(w):
            wa = window(pa, i, j)
            wb = window(pb, i, j)
            da = wa - wa.mean()
            db = wb - wb.mean()
            va = (da * da).mean()
            vb = (db * db).mean()
            if va < VAR_EPS and vb < VAR_EPS:
                out[i, j] = 1.0
            elif va < VAR_EPS or vb < VAR_EPS:
                out[i, j] = 0.0
            else:
                out[i, j] = min(1.0, max(-1.0, (da * db).mean() / np.sqrt(va * vb)))
    return out


# ---------------------------------------------------------------------------
# full distortion pipeline from preprocessed fields and raw saliency maps

def naive_quality(ref, test, sal_ref, sal_test):
    """Straight-line transcription of the whole scoring chain.

    Returns (final map, pooled score)."""
    h, w = ref.shape
    joint = max(sal_ref.max(), sal_test.max())
    s_r = sal_ref / joint
    s_t = sal_test / joint

    v_r = naive_rms_contrast(ref)
    v_t = naive_rms_contrast(test)
    lc_d = ((v_r - v_t) / 2.0) ** 2

    gx_r, gy_r = naive_scharr(ref)
    gx_t, gy_t = naive_scharr(test)
    m_r = np.sqrt(gx_r ** 2 + gy_r ** 2)
    m_t = np.sqrt(gx_t ** 2 + gy_t ** 2)
    o_r = naive_orientation(gx_r, gy_r)
    o_t = naive_orientation(gx_t, gy_t)
    g_d = (np.maximum(np.abs(m_r - m_t) / np.sqrt(2.0),
                      np.abs(o_r - o_t) / (2.0 * np.pi)) / 2.0) ** 2

    sm_c = naive_local_pearson(s_r, s_t)
    x_c = naive_local_pearson(gx_r, gx_t)
    y_c = naive_local_pearson(gy_r, gy_t)

    d_f = np.empty((h, w))
    num = 0.0
    den = 0.0
    for i in range(h):
        for j in range(w):
            h_c = max(x_c[i, j], y_c[i, j])
            l_c = min(x_c[i, j], y_c[i, j])
            t = (lc_d[i, j] * ((1.0 - sm_c[i, j]) / 2.0) * g_d[i, j]) ** (1.0 / 3.0)
            d_p = (max(abs(h_c - l_c), 1.0 - x_c[i, j], 1.0 - y_c[i, j], 1.0 - sm_c[i, j]) / 2.0) * t
            if sm_c[i, j] > l_c:
                a = np.sqrt(lc_d[i, j] * (1.0 - sm_c[i, j]) / 2.0)
                b = np.sqrt(lc_d[i, j] * g_d[i, j])
            else:
                a = 0.0
                b = 0.0
            d_f[i, j] = d_p + a + b
            weight = max(s_r[i, j], s_t[i, j])
            num += d_f[i, j] * weight
            den += weight
    return d_f, 10000.0 * num / den


# ---------------------------------------------------------------------------
# explicit-matrix DFT and saliency references

def dft2(x):
    h, w = x.shape
    wh = np.exp(-2j * np.pi * np.outer(np.arange(h), np.arange(h)) / h)
    ww = np.exp(-2j * np.pi * np.outer(np.arange(w), np.arange(w)) / w)
    return wh @ x.astype(complex) @ ww


def idft2(spectrum):
    h, w = spectrum.shape
    wh = np.exp(2j * np.pi * np.outer(np.arange(h), np.arange(h)) / h)
    ww = np.exp(2j * np.pi * np.outer(np.arange(w), np.arange(w)) / w)
    return (wh @ spectrum @ ww) / (h * w)


def naive_resize_bilinear(field, out_h, out_w):
    in_h, in_w = field.shape
    out = np.empty((out_h, out_w))
    for i in range(out_h):
        y = min(max((i + 0.5) * in_h / out_h - 0.5, 0.0), in_h - 1.0)
        y0 = int(np.floor(y))
        y1 = min(y0 + 1, in_h - 1)
        fy = y - y0
        for j in range(out_w):
            x = min(max((j + 0.5) * in_w / out_w - 0.5, 0.0), in_w - 1.0)
            x0 = int(np.floor(x))
            x1 = min(x0 + 1, in_w - 1)
            fx = x - x0
            top = field[y0, x0] * (1 - fx) + field[y0, x1] * fx
            bot = field[y1, x0] * (1 - fx) + field[y1, x1] * fx
            out[i, j] = top * (1 - fy) + bot * fy
    return out


def naive_mean3(field):
    h, w = field.shape
    padded = mirror_pad(field)
    out = np.empty((h, w))
    for i in range(h):
        for j in range(w):
            out[i, j] = window(padded, i, j).sum() / 9.0
    return out


def gaussian_kernel(size=9, sigma=2.5):
    half = (size - 1) / 2.0
    ax = np.arange(size) - half
    xx, yy = np.meshgrid(ax, ax)
    k = np.exp(-(xx ** 2 + yy ** 2) / (2.0 * sigma ** 2))
    return k / k.sum()


def naive_smooth(field, kernel):
    h, w = field.shape
    margin = kernel.shape[0] // 2
    padded = mirror_pad(field, margin)
    out = np.empty((h, w))
    size = kernel.shape[0]
    for i in range(h):
        for j in range(w):
            out[i, j] = (padded[i:i + size, j:j + size] * kernel).sum()
    return out


def naive_spectral_residual(field, working_width=64):
    h, w = field.shape
    small_h = max(3, round(h * working_width / w))
    small = naive_resize_bilinear(field, small_h, working_width)
    spectrum = dft2(small)
    log_amp = np.log(np.abs(spectrum) + 1e-10)
    residual = log_amp - naive_mean3(log_amp)
    recombined = np.exp(residual) * np.exp(1j * np.angle(spectrum))
    raw = np.abs(idft2(recombined)) ** 2
    smoothed = naive_smooth(raw, gaussian_kernel())
    return np.maximum(naive_resize_bilinear(smoothed, h, w), 0.0)


def naive_pft(field, working_width=64):
    h, w = field.shape
    small_h = max(3, round(h * working_width / w))
    small = naive_resize_bilinear(field, small_h, working_width)
    spectrum = dft2(small)
    amp = np.abs(spectrum)
    unit = np.where(amp > amp.max() * 1e-12, np.exp(1j * np.angle(spectrum)), 0.0)
    raw = np.abs(idft2(unit)) ** 2
    smoothed = naive_smooth(raw, gaussian_kernel())
    return np.maximum(naive_resize_bilinear(smoothed, h, w), 0.0)


# ---------------------------------------------------------------------------
# brute-force evaluation statistics

def brute_ranks(x):
    n = len(x)
    ranks = np.empty(n)
    for i in range(n):
        below = sum(1 for j in range(n) if x[j] < x[i])
        equal = sum(1 for j in range(n) if x[j] == x[i])
        ranks[i] = below + (equal + 1) / 2.0
    return ranks


def brute_pearson(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    dx = x - x.mean()
    dy = y - y.mean()
    return (dx * dy).sum() / np.sqrt((dx * dx).sum() * (dy * dy).sum())


def brute_srocc(x, y):
    return brute_pearson(brute_ranks(x), brute_ranks(y))


def brute_krocc(x, y):
    n = len(x)
    concordant = discordant = 0
    for i in range(n):
        for j in range(i + 1, n):
            sx = np.sign(x[j] - x[i])
            sy = np.sign(y[j] - y[i])
            if sx * sy > 0:
                concordant += 1
            elif sx * sy < 0:
                discordant += 1
    n0 = n * (n - 1) / 2.0
    n1 = _tie_pairs(x)
    n2 = _tie_pairs(y)
    return (concordant - discordant) / np.sqrt((n0 - n1) * (n0 - n2))


def _tie_pairs(values):
    total = 0.0
    for v in set(float(v) for v in values):
        t = sum(1 for u in values if u == v)
        total += t * (t - 1) / 2.0
    return total


def brute_mae_rmse(residuals):
    residuals = np.asarray(residuals, dtype=float)
    return np.abs(residuals).mean(), np.sqrt((residuals ** 2).mean())
