#!/usr/bin/env python3
"""Regenerate the bundled test images under tests/data/images.

The images are synthetic but natural-looking: a 1/f textured background
with smooth illumination gradients, a few soft blobs, and hard-edged
rectangles for gradient structure. Deterministic for a fixed seed.
"""

import argparse
from pathlib import Path

import numpy as np
from PIL import Image

SIZES = [(96, 128), (128, 128), (120, 160), (96, 144), (128, 96),
         (112, 112), (104, 136), (144, 112), (96, 120), (128, 144)]


def pink_noise(rng, h, w, exponent=1.5):
    spectrum = rng.normal(size=(h, w)) + 1j * rng.normal(size=(h, w))
    fy = np.fft.fftfreq(h)[:, None]
    fx = np.fft.fftfreq(w)[None, :]
    radius = np.sqrt(fy * fy + fx * fx)
    radius[0, 0] = 1.0
    shaped = spectrum / radius ** exponent
    shaped[0, 0] = 0.0
    noise = np.fft.ifft2(shaped).real
    return (noise - noise.min()) / (noise.max() - noise.min())


def synth_image(rng, h, w):
    yy, xx = np.mgrid[0:h, 0:w]
    angle = rng.uniform(0, 2 * np.pi)
    ramp = (np.cos(angle) * xx / w + np.sin(angle) * yy / h)
    ramp = (ramp - ramp.min()) / (ramp.max() - ramp.min())
    img = 0.35 * ramp + 0.45 * pink_noise(rng, h, w)
    for _ in range(rng.integers(2, 5)):
        cy, cx = rng.uniform(0.2, 0.8) * h, rng.uniform(0.2, 0.8) * w
        sy, sx = rng.uniform(0.05, 0.2) * h, rng.uniform(0.05, 0.2) * w
        blob = np.exp(-(((yy - cy) / sy) ** 2 + ((xx - cx) / sx) ** 2) / 2)
        img += rng.uniform(-0.25, 0.3) * blob
    for _ in range(rng.integers(1, 4)):
        y0 = rng.integers(0, h - 12)
        x0 = rng.integers(0, w - 12)
        img[y0:y0 + rng.integers(8, h // 3), x0:x0 + rng.integers(8, w // 3)] += rng.uniform(-0.2, 0.25)
    img = (img - img.min()) / (img.max() - img.min())
    return 0.05 + 0.9 * img


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=Path(__file__).resolve().parents[1] / "tests/data/images")
    parser.add_argument("--seed", type=int, default=20240614)
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(args.seed)
    for index, (h, w) in enumerate(SIZES):
        img = synth_image(rng, h, w)
        pixels = np.round(img * 255).astype(np.uint8)
        if index in (3, 7):  # two RGB variants with mild channel offsets
            r = pixels
            g = np.roll(pixels, 1, axis=1)
            b = np.clip(pixels.astype(int) + 8, 0, 255).astype(np.uint8)
            Image.fromarray(np.dstack([r, g, b]), mode="RGB").save(out / f"img{index:02d}.png")
        else:
            Image.fromarray(pixels, mode="L").save(out / f"img{index:02d}.png")
    print(f"wrote {len(SIZES)} images to {out}")


if __name__ == "__main__":
    main()
