//! Texture-transfer data augmentation for CT-like image segmentation.

extern crate blas_src;

pub mod error;

pub use error::{Error, Result};
