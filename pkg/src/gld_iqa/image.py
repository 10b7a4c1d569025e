"""Image decoding, grayscale conversion, preprocessing, and window padding.

A scalar field is represented throughout the package as a 2-D float64
numpy array of finite values. Preprocessed image pairs carry values in
[0, 1] and are at least 3x3 so that every 3x3 sliding window fits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import InvalidArgument, InvalidImage, PairMismatch

# BT.601 luma weights as exact integer ratios of 1000, so that pure white
# maps to exactly 1.0 and pure primaries to exactly 0.299 / 0.587 / 0.114.
_LUMA_WEIGHTS = (299, 587, 114)

# Rescaling kicks in once the short side reaches 1.5x this target.
_SCALE_TARGET = 256


def as_field(values) -> np.ndarray:
    """Validate and return a scalar field as a float64 2-D array.

    Raises InvalidArgument on wrong rank or non-finite entries.
    """
    field = np.asarray(values, dtype=np.float64)
    if field.ndim != 2 or field.size == 0:
        raise InvalidArgument(f"expected a non-empty 2-D field, got shape {field.shape}")
    if not np.all(np.isfinite(field)):
        raise InvalidArgument("field contains NaN or infinite values")
    return field


@dataclass(frozen=True)
class ImagePair:
    """A preprocessed reference/test field pair with matching geometry."""

    reference: np.ndarray
    test: np.ndarray
    scale_factor: int = 1

    def __post_init__(self):
        ref = as_field(self.reference)
        tst = as_field(self.test)
        if ref.shape != tst.shape:
            raise PairMismatch(f"shape mismatch: {ref.shape} vs {tst.shape}")
        if min(ref.shape) < 3:
            raise InvalidArgument(f"pair too small for 3x3 windows: {ref.shape}")
        if self.scale_factor < 1:
            raise InvalidArgument("scale_factor must be a positive integer")
        for name, f in (("reference", ref), ("test", tst)):
            if f.min() < 0.0 or f.max() > 1.0:
                raise InvalidArgument(f"{name} values outside [0, 1]")
        object.__setattr__(self, "reference", ref)
        object.__setattr__(self, "test", tst)

    @property
    def shape(self) -> tuple[int, int]:
        return self.reference.shape


def load_raster(path) -> np.ndarray:
    """Decode a PNG or BMP file into an integer pixel array.

    Returns a (H, W) or (H, W, 3) uint8/uint16 array; alpha channels are
    dropped. Raises InvalidImage if the file cannot be decoded.
    """
    try:
        with Image.open(path) as img:
            img.load()
            if img.mode == "P":
                img = img.convert("RGB")
            arr = np.asarray(img)
    except (UnidentifiedImageError, OSError, ValueError) as exc:
        raise InvalidImage(f"cannot decode {path}: {exc}") from exc
    if arr.ndim == 3 and arr.shape[2] == 4:
        arr = arr[:, :, :3]  # drop alpha
    elif arr.ndim == 3 and arr.shape[2] == 2:
        arr = arr[:, :, 0]  # grayscale+alpha
    if arr.dtype == np.int32:
        # Pillow widens 16-bit grayscale PNGs to mode "I".
        arr = arr.astype(np.uint16)
    return arr


def infer_bit_depth(raster: np.ndarray) -> int:
    return 16 if raster.dtype.itemsize >= 2 else 8


def to_grayscale(raster, bit_depth: int) -> np.ndarray:
    """Convert an RGB or grayscale raster to a luma field in [0, 1].

    RGB rasters use BT.601 weights; grayscale rasters are only rescaled
    by the full-scale value of the given bit depth.
    """
    if bit_depth not in (8, 16):
        raise InvalidArgument(f"unsupported bit depth {bit_depth}")
    arr = np.asarray(raster)
    if arr.size == 0:
        raise InvalidImage("empty raster")
    full_scale = float(2**bit_depth - 1)
    if arr.ndim == 2:
        return arr.astype(np.float64) / full_scale
    if arr.ndim == 3 and arr.shape[2] >= 3:
        channels = arr[:, :, :3].astype(np.float64)
        wr, wg, wb = _LUMA_WEIGHTS
        luma = wr * channels[:, :, 0] + wg * channels[:, :, 1] + wb * channels[:, :, 2]
        return luma / (1000.0 * full_scale)
    raise InvalidImage(f"unsupported raster shape {arr.shape}")


def scale_factor_for(shape: tuple[int, int]) -> int:
    """Downsampling factor for a field: short side rounded to multiples of 256."""
    short = min(shape)
    # round-half-away-from-zero, not banker's rounding
    return max(1, int(np.floor(short / _SCALE_TARGET + 0.5)))


def auto_scale(field, factor: int | None = None) -> tuple[np.ndarray, int]:
    """Block-average and subsample a field by its automatic scale factor.

    Trailing rows/columns that do not fill a complete FxF block are
    truncated. Returns the (possibly unchanged) field and the factor used.
    """
    field = as_field(field)
    if min(field.shape) < 3:
        raise InvalidArgument(f"field too small to scale: {field.shape}")
    f = scale_factor_for(field.shape) if factor is None else int(factor)
    if f == 1:
        return field, 1
    h, w = field.shape
    hc, wc = (h // f) * f, (w // f) * f
    blocks = field[:hc, :wc].reshape(hc // f, f, wc // f, f)
    return blocks.mean(axis=(1, 3)), f


def pad_symmetric(field, margin: int) -> np.ndarray:
    """Mirror-pad a field without repeating the edge pixel.

    A 1-D row [a, b, c] padded by 1 becomes [b, a, b, c, b].
    """
    field = as_field(field)
    if margin < 1:
        raise InvalidArgument("margin must be >= 1")
    if margin >= min(field.shape):
        raise InvalidArgument(f"margin {margin} too large for field of shape {field.shape}")
    return np.pad(field, margin, mode="reflect")


def preprocess_pair(ref_raster, test_raster) -> ImagePair:
    """Run the shared preprocessing chain on a raw raster pair.

    Grayscale conversion, automatic downscaling (factor fixed by the
    reference), and a [0, 1] clamp. Raises PairMismatch if the rasters
    have different pixel dimensions.
    """
    ref_arr = np.asarray(ref_raster)
    test_arr = np.asarray(test_raster)
    if ref_arr.size == 0 or test_arr.size == 0:
        raise InvalidImage("empty raster")
    if ref_arr.shape[:2] != test_arr.shape[:2]:
        raise PairMismatch(f"dimension mismatch: {ref_arr.shape[:2]} vs {test_arr.shape[:2]}")
    ref = to_grayscale(ref_arr, infer_bit_depth(ref_arr))
    tst = to_grayscale(test_arr, infer_bit_depth(test_arr))
    factor = scale_factor_for(ref.shape)
    ref, _ = auto_scale(ref, factor)
    tst, _ = auto_scale(tst, factor)
    return ImagePair(np.clip(ref, 0.0, 1.0), np.clip(tst, 0.0, 1.0), factor)


def load_pair(ref_path, test_path) -> ImagePair:
    """Decode two image files and preprocess them as a pair."""
    return preprocess_pair(load_raster(ref_path), load_raster(test_path))
