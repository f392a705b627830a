//! Image decoding and the per-pixel RGB/HSV view of the test paper.
//!
//! Both color coordinates live on the same `[0,256)` integer scale per
//! channel, so an `n x n x n` cube grid tiles RGB and HSV space
//! identically. Hue in degrees is mapped linearly from `[0,360)` onto
//! `[0,256)` and floored; saturation and value are rescaled to `[0,256)`
//! and floored.

use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::error::{Error, Result};

/// Axis-aligned rectangle in pixel coordinates, `[x, x+width) x [y, y+height)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rect {
    pub x: u32,
    pub y: u32,
    pub width: u32,
    pub height: u32,
}

impl Rect {
    pub fn new(x: u32, y: u32, width: u32, height: u32) -> Self {
        Rect { x, y, width, height }
    }

    pub fn area(&self) -> u64 {
        self.width as u64 * self.height as u64
    }

    pub fn contains_rect(&self, inner: &Rect) -> bool {
        inner.x >= self.x
            && inner.y >= self.y
            && inner.x as u64 + inner.width as u64 <= self.x as u64 + self.width as u64
            && inner.y as u64 + inner.height as u64 <= self.y as u64 + self.height as u64
    }

    pub fn contains_point(&self, x: u32, y: u32) -> bool {
        x >= self.x && x < self.x + self.width && y >= self.y && y < self.y + self.height
    }
}

/// Where the test paper and the hand-chosen focal area sit in the source
/// image, plus how the focal area is subdivided for row-wise classification
/// and square-wise validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionSpec {
    /// Test-paper rectangle in source-image coordinates.
    pub paper_rect: Rect,
    /// Focal rectangle in source-image coordinates; must lie inside `paper_rect`.
    pub focal_rect: Rect,
    pub rows: u32,
    pub squares_per_row: u32,
}

impl RegionSpec {
    pub fn validate(&self) -> Result<()> {
        if self.rows < 1 || self.squares_per_row < 1 {
            return Err(Error::Geometry(
                "rows and squares_per_row must be >= 1".into(),
            ));
        }
        if self.paper_rect.area() == 0 || self.focal_rect.area() == 0 {
            return Err(Error::Geometry("empty paper or focal rectangle".into()));
        }
        if !self.paper_rect.contains_rect(&self.focal_rect) {
            return Err(Error::Geometry(
                "focal_rect must lie inside paper_rect".into(),
            ));
        }
        Ok(())
    }

    /// Focal rectangle translated into paper-local coordinates.
    pub fn focal_local(&self) -> Rect {
        Rect {
            x: self.focal_rect.x - self.paper_rect.x,
            y: self.focal_rect.y - self.paper_rect.y,
            width: self.focal_rect.width,
            height: self.focal_rect.height,
        }
    }
}

/// Decoded test-paper region with both 3D color coordinates per pixel,
/// row-major. Immutable after construction.
#[derive(Debug, Clone)]
pub struct PixelGrid {
    pub width: u32,
    pub height: u32,
    pub crop_origin: (u32, u32),
    rgb: Vec<[u8; 3]>,
    hsv: Vec<[u8; 3]>,
}

impl PixelGrid {
    /// Build a grid from raw RGB pixels (row-major, `width * height` long);
    /// HSV is derived on construction.
    pub fn from_rgb_pixels(
        width: u32,
        height: u32,
        crop_origin: (u32, u32),
        rgb: Vec<[u8; 3]>,
    ) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::Geometry("pixel grid must be non-empty".into()));
        }
        if rgb.len() != width as usize * height as usize {
            return Err(Error::Geometry(format!(
                "pixel buffer length {} does not match {}x{}",
                rgb.len(),
                width,
                height
            )));
        }
        let hsv = rgb.iter().map(|&[r, g, b]| rgb_to_hsv(r, g, b)).collect();
        Ok(PixelGrid { width, height, crop_origin, rgb, hsv })
    }

    pub fn len(&self) -> usize {
        self.rgb.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rgb.is_empty()
    }

    #[inline]
    pub fn idx(&self, x: u32, y: u32) -> usize {
        y as usize * self.width as usize + x as usize
    }

    #[inline]
    pub fn rgb_at(&self, idx: usize) -> [u8; 3] {
        self.rgb[idx]
    }

    #[inline]
    pub fn hsv_at(&self, idx: usize) -> [u8; 3] {
        self.hsv[idx]
    }

    pub fn rgb_pixels(&self) -> &[[u8; 3]] {
        &self.rgb
    }

    pub fn hsv_pixels(&self) -> &[[u8; 3]] {
        &self.hsv
    }
}

/// Standard hexcone RGB -> HSV, quantized onto the `[0,256)` integer scale.
/// Gray inputs (`r == g == b`) map to hue 0, saturation 0.
pub fn rgb_to_hsv(r: u8, g: u8, b: u8) -> [u8; 3] {
    let max = r.max(g).max(b);
    let min = r.min(g).min(b);
    let delta = (max - min) as i64;
    let v = max;
    if delta == 0 {
        return [0, 0, v];
    }
    let s = (255 * delta / max as i64) as u8;

    // Hue as a rational h6 = a + p/delta of a sixth-turn, then
    // floor(256 * h6 / 6) without leaving integer arithmetic.
    let (r, g, b) = (r as i64, g as i64, b as i64);
    let (sector, offset) = if max == r as u8 {
        if g >= b {
            (0, g - b)
        } else {
            (6, g - b)
        }
    } else if max == g as u8 {
        (2, b - r)
    } else {
        (4, r - g)
    };
    let num = 128 * (sector * delta + offset);
    let h = (num / (3 * delta)) as u8;
    [h, s, v]
}

/// Decode a PNG or JPEG and crop it to the paper rectangle.
pub fn load_image(path: &Path, region: &RegionSpec) -> Result<PixelGrid> {
    region.validate()?;
    let img = image::open(path)?.to_rgb8();
    crop_to_grid(&img, region)
}

/// Crop an in-memory RGB image to the paper rectangle.
pub fn crop_to_grid(img: &image::RgbImage, region: &RegionSpec) -> Result<PixelGrid> {
    region.validate()?;
    let rect = region.paper_rect;
    let (w, h) = img.dimensions();
    let bounds = Rect::new(0, 0, w, h);
    if !bounds.contains_rect(&rect) {
        return Err(Error::Geometry(format!(
            "paper_rect {}x{}+{}+{} exceeds image bounds {}x{}",
            rect.width, rect.height, rect.x, rect.y, w, h
        )));
    }
    let mut rgb = Vec::with_capacity(rect.area() as usize);
    for y in rect.y..rect.y + rect.height {
        for x in rect.x..rect.x + rect.width {
            rgb.push(img.get_pixel(x, y).0);
        }
    }
    PixelGrid::from_rgb_pixels(rect.width, rect.height, (rect.x, rect.y), rgb)
}
