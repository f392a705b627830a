//! Batch analysis of spray test-paper photographs.
//!
//! The library identifies targeted color dots (purple droplets on yellow
//! test paper) exhaustively under heterogeneous shading, then tests two
//! kinds of uniformness:
//!
//! * dot-size uniformness via Poisson / Exponential fits and a
//!   parametric-bootstrap Kolmogorov-Smirnov test;
//! * 2D spatial uniformness via minimum spanning trees over density-selected
//!   grid cells, a Monte-Carlo ensemble of uniform MSTs, Mann-Whitney AUC
//!   comparison, and a hierarchical-clustering-tree product-of-odds p-value,
//!   evaluated over progressively enlarged density scales.
//!
//! Color identification exploits low color-complexity: the pixels of a
//! natural image occupy only a small fraction of the `n x n x n` cubes
//! tiling RGB or HSV space, so whole-image labeling reduces to a small
//! nearest-center problem over occupied-cube centers.

pub mod classify;
pub mod cluster;
pub mod config;
pub mod dots;
pub mod error;
pub mod export;
pub mod fixture;
pub mod image_io;
pub mod pipeline;
pub mod quant;
pub mod size_stats;
pub mod spatial;
pub mod stats;
pub mod uniformness;

pub use error::{Error, Result};

/// Initialize the global rayon pool. `0` keeps the default (available
/// parallelism). Calling more than once is a no-op.
pub fn init_threads(threads: usize) {
    if threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
}
