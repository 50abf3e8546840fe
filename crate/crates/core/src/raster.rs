//! Grayscale raster images, strict PGM (P2/P5) parsing and writing, and
//! thresholding into the binary ink rasters consumed by box counting.
//!
//! Only the two graymap flavours of the Netpbm family are handled. Headers
//! are whitespace-separated tokens; `#` comments are allowed in the header
//! only. Binary (P5) payloads use one byte per sample for `maxval <= 255`
//! and two big-endian bytes otherwise.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RasterError {
    #[error("unsupported magic {0:?} (expected \"P2\" or \"P5\")")]
    UnsupportedMagic(String),
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("truncated pixel data: expected {expected} samples, got {got}")]
    TruncatedData { expected: usize, got: usize },
    #[error("trailing data after pixel raster")]
    TrailingData,
    #[error("pixel {index} has value {value} > maxval {maxval}")]
    PixelOutOfRange { index: usize, value: u32, maxval: u16 },
    #[error("threshold {threshold} exceeds maxval {maxval}")]
    ThresholdOutOfRange { threshold: u16, maxval: u16 },
    #[error("image dimensions {width}x{height} are invalid")]
    BadDimensions { width: u64, height: u64 },
}

/// Grayscale image with samples in `[0, maxval]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: u32,
    height: u32,
    maxval: u16,
    pixels: Vec<u16>,
}

impl GrayImage {
    pub fn new(
        width: u32,
        height: u32,
        maxval: u16,
        pixels: Vec<u16>,
    ) -> Result<Self, RasterError> {
        if width == 0 || height == 0 {
            return Err(RasterError::BadDimensions { width: width as u64, height: height as u64 });
        }
        if maxval == 0 {
            return Err(RasterError::MalformedHeader("maxval must be >= 1".into()));
        }
        let expected = width as usize * height as usize;
        if pixels.len() != expected {
            return Err(RasterError::TruncatedData { expected, got: pixels.len() });
        }
        if let Some((index, &value)) = pixels.iter().enumerate().find(|(_, &p)| p > maxval) {
            return Err(RasterError::PixelOutOfRange { index, value: value as u32, maxval });
        }
        Ok(Self { width, height, maxval, pixels })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn maxval(&self) -> u16 {
        self.maxval
    }

    pub fn pixels(&self) -> &[u16] {
        &self.pixels
    }

    pub fn get(&self, x: u32, y: u32) -> u16 {
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    /// Default binarization threshold for this image's depth: `ceil((maxval+1)/2)`.
    pub fn default_threshold(&self) -> u16 {
        ((self.maxval as u32 + 2) / 2) as u16
    }
}

/// Row-major bit raster; `true` marks an ink (drawing stroke) pixel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryImage {
    width: u32,
    height: u32,
    bits: Vec<bool>,
}

impl BinaryImage {
    /// All-background raster of the given dimensions.
    pub fn blank(width: u32, height: u32) -> Result<Self, RasterError> {
        if width == 0 || height == 0 {
            return Err(RasterError::BadDimensions { width: width as u64, height: height as u64 });
        }
        Ok(Self { width, height, bits: vec![false; width as usize * height as usize] })
    }

    pub fn from_bits(width: u32, height: u32, bits: Vec<bool>) -> Result<Self, RasterError> {
        if width == 0 || height == 0 {
            return Err(RasterError::BadDimensions { width: width as u64, height: height as u64 });
        }
        let expected = width as usize * height as usize;
        if bits.len() != expected {
            return Err(RasterError::TruncatedData { expected, got: bits.len() });
        }
        Ok(Self { width, height, bits })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn get(&self, x: u32, y: u32) -> bool {
        self.bits[y as usize * self.width as usize + x as usize]
    }

    pub fn set(&mut self, x: u32, y: u32, ink: bool) {
        self.bits[y as usize * self.width as usize + x as usize] = ink;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn ink_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Grayscale rendering: ink pixels become 0 (black), background `maxval`.
    pub fn to_gray(&self, maxval: u16) -> GrayImage {
        let pixels = self.bits.iter().map(|&b| if b { 0 } else { maxval }).collect();
        GrayImage { width: self.width, height: self.height, maxval, pixels }
    }
}

/// Tight inclusive bounds `(x0, y0, x1, y1)` of the ink pixels, or `None`
/// for a blank image.
pub fn ink_bounding_box(img: &BinaryImage) -> Option<(u32, u32, u32, u32)> {
    let (mut x0, mut y0) = (u32::MAX, u32::MAX);
    let (mut x1, mut y1) = (0u32, 0u32);
    let mut any = false;
    for y in 0..img.height {
        let row = &img.bits[y as usize * img.width as usize..(y as usize + 1) * img.width as usize];
        for (x, &b) in row.iter().enumerate() {
            if b {
                let x = x as u32;
                any = true;
                x0 = x0.min(x);
                y0 = y0.min(y);
                x1 = x1.max(x);
                y1 = y1.max(y);
            }
        }
    }
    any.then_some((x0, y0, x1, y1))
}

/// Threshold a grayscale image into ink bits: `ink = pixel < threshold`
/// (dark strokes on light ground).
pub fn binarize(img: &GrayImage, threshold: u16) -> Result<BinaryImage, RasterError> {
    if threshold > img.maxval {
        return Err(RasterError::ThresholdOutOfRange { threshold, maxval: img.maxval });
    }
    let bits = img.pixels.iter().map(|&p| p < threshold).collect();
    Ok(BinaryImage { width: img.width, height: img.height, bits })
}

/// Parse a PGM file (ASCII "P2" or binary "P5") from raw bytes.
pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage, RasterError> {
    let mut cur = Cursor { bytes, pos: 0 };
    let magic = cur.token()?;
    let binary = match magic.as_str() {
        "P2" => false,
        "P5" => true,
        other => return Err(RasterError::UnsupportedMagic(other.to_string())),
    };
    let width = cur.header_number("width")?;
    let height = cur.header_number("height")?;
    let maxval = cur.header_number("maxval")?;
    if width == 0 || height == 0 || width > u32::MAX as u64 || height > u32::MAX as u64 {
        return Err(RasterError::BadDimensions { width, height });
    }
    if !(1..=65535).contains(&maxval) {
        return Err(RasterError::MalformedHeader(format!("maxval {maxval} outside [1, 65535]")));
    }
    let maxval = maxval as u16;
    let expected = (width as usize)
        .checked_mul(height as usize)
        .ok_or(RasterError::BadDimensions { width, height })?;

    let pixels = if binary {
        cur.skip_single_whitespace()?;
        let bytes_per = if maxval > 255 { 2 } else { 1 };
        let data = &cur.bytes[cur.pos..];
        let need = expected * bytes_per;
        if data.len() < need {
            return Err(RasterError::TruncatedData { expected, got: data.len() / bytes_per });
        }
        if data.len() > need {
            return Err(RasterError::TrailingData);
        }
        if bytes_per == 1 {
            data.iter().map(|&b| b as u16).collect()
        } else {
            data.chunks_exact(2).map(|c| u16::from_be_bytes([c[0], c[1]])).collect()
        }
    } else {
        let rest = std::str::from_utf8(&cur.bytes[cur.pos..])
            .map_err(|_| RasterError::MalformedHeader("non-ASCII data in P2 raster".into()))?;
        let mut pixels = Vec::with_capacity(expected);
        for tok in rest.split_ascii_whitespace() {
            if pixels.len() == expected {
                return Err(RasterError::TrailingData);
            }
            let v: u32 = tok
                .parse()
                .map_err(|_| RasterError::MalformedHeader(format!("bad sample {tok:?}")))?;
            if v > maxval as u32 {
                return Err(RasterError::PixelOutOfRange { index: pixels.len(), value: v, maxval });
            }
            pixels.push(v as u16);
        }
        if pixels.len() < expected {
            return Err(RasterError::TruncatedData { expected, got: pixels.len() });
        }
        pixels
    };

    GrayImage::new(width as u32, height as u32, maxval, pixels)
}

/// Serialize to PGM bytes; `ascii` selects P2, otherwise P5.
/// `read_pgm(write_pgm(img, _))` returns the identical image.
pub fn write_pgm(img: &GrayImage, ascii: bool) -> Vec<u8> {
    let mut out = Vec::new();
    let magic = if ascii { "P2" } else { "P5" };
    out.extend_from_slice(
        format!("{magic}\n{} {}\n{}\n", img.width, img.height, img.maxval).as_bytes(),
    );
    if ascii {
        for row in img.pixels.chunks(img.width as usize) {
            let line: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            out.extend_from_slice(line.join(" ").as_bytes());
            out.push(b'\n');
        }
    } else if img.maxval > 255 {
        for &p in &img.pixels {
            out.extend_from_slice(&p.to_be_bytes());
        }
    } else {
        out.extend(img.pixels.iter().map(|&p| p as u8));
    }
    out
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    /// Next header token, skipping whitespace and `#` comment lines.
    fn token(&mut self) -> Result<String, RasterError> {
        loop {
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            if self.pos < self.bytes.len() && self.bytes[self.pos] == b'#' {
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
                continue;
            }
            break;
        }
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(RasterError::MalformedHeader("unexpected end of header".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .map(str::to_owned)
            .map_err(|_| RasterError::MalformedHeader("non-ASCII header token".into()))
    }

    fn header_number(&mut self, what: &str) -> Result<u64, RasterError> {
        let tok = self.token()?;
        tok.parse().map_err(|_| RasterError::MalformedHeader(format!("bad {what} {tok:?}")))
    }

    /// P5 requires exactly one whitespace byte between maxval and the raster.
    fn skip_single_whitespace(&mut self) -> Result<(), RasterError> {
        if self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
            Ok(())
        } else {
            Err(RasterError::MalformedHeader("missing whitespace before P5 raster".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_ascii_pgm() {
        let img = read_pgm(b"P2\n2 1\n255\n0 255\n").unwrap();
        assert_eq!((img.width(), img.height(), img.maxval()), (2, 1, 255));
        assert_eq!(img.pixels(), &[0, 255]);
    }

    #[test]
    fn parses_binary_equivalent() {
        let ascii = read_pgm(b"P2\n2 1\n255\n0 255\n").unwrap();
        let binary = read_pgm(b"P5\n2 1\n255\n\x00\xff").unwrap();
        assert_eq!(ascii, binary);
    }

    #[test]
    fn rejects_unsupported_magic() {
        assert_eq!(
            read_pgm(b"P3\n1 1\n255\n0 0 0\n").unwrap_err(),
            RasterError::UnsupportedMagic("P3".into())
        );
    }

    #[test]
    fn skips_header_comments() {
        let img = read_pgm(b"P2\n# gimp comment\n2 1 # trailing\n255\n7 9\n").unwrap();
        assert_eq!(img.pixels(), &[7, 9]);
    }

    #[test]
    fn rejects_sample_above_maxval() {
        let err = read_pgm(b"P2\n2 1\n15\n3 16\n").unwrap_err();
        assert_eq!(err, RasterError::PixelOutOfRange { index: 1, value: 16, maxval: 15 });
    }

    #[test]
    fn rejects_truncated_and_trailing_data() {
        assert!(matches!(
            read_pgm(b"P2\n2 2\n255\n1 2 3\n"),
            Err(RasterError::TruncatedData { .. })
        ));
        assert_eq!(read_pgm(b"P2\n1 1\n255\n1 2\n").unwrap_err(), RasterError::TrailingData);
        assert!(matches!(read_pgm(b"P5\n2 2\n255\nabc"), Err(RasterError::TruncatedData { .. })));
        assert_eq!(read_pgm(b"P5\n1 1\n255\nab").unwrap_err(), RasterError::TrailingData);
    }

    #[test]
    fn sixteen_bit_round_trip() {
        let img = GrayImage::new(3, 2, 65535, vec![0, 1, 300, 65535, 12345, 256]).unwrap();
        for ascii in [true, false] {
            assert_eq!(read_pgm(&write_pgm(&img, ascii)).unwrap(), img);
        }
    }

    #[test]
    fn binarize_thresholds_strictly_below() {
        let img = GrayImage::new(2, 1, 255, vec![0, 255]).unwrap();
        let bin = binarize(&img, 128).unwrap();
        assert_eq!(bin.bits(), &[true, false]);
        let none = binarize(&img, 0).unwrap();
        assert_eq!(none.ink_count(), 0);
        assert_eq!(
            binarize(&img, 256).unwrap_err(),
            RasterError::ThresholdOutOfRange { threshold: 256, maxval: 255 }
        );
    }

    #[test]
    fn default_threshold_scales_with_maxval() {
        let img = GrayImage::new(1, 1, 255, vec![0]).unwrap();
        assert_eq!(img.default_threshold(), 128);
        let deep = GrayImage::new(1, 1, 65535, vec![0]).unwrap();
        assert_eq!(deep.default_threshold(), 32768);
        let one = GrayImage::new(1, 1, 1, vec![0]).unwrap();
        assert_eq!(one.default_threshold(), 1);
    }

    #[test]
    fn bounding_box_cases() {
        let mut img = BinaryImage::blank(64, 64).unwrap();
        assert_eq!(ink_bounding_box(&img), None);
        img.set(10, 20, true);
        assert_eq!(ink_bounding_box(&img), Some((10, 20, 10, 20)));
        let full = BinaryImage::from_bits(64, 64, vec![true; 64 * 64]).unwrap();
        assert_eq!(ink_bounding_box(&full), Some((0, 0, 63, 63)));
    }
}
