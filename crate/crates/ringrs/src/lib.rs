//! File framing, benchmarks and self checks on top of `ringrs-core`.

pub mod basis_file;
pub mod bench;
pub mod filecodec;
pub mod frame;
pub mod selftest;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Code(#[from] ringrs_core::Error),
    #[error("basis file line {line}: {why}")]
    BasisFile { line: usize, why: String },
    #[error("frame: {0}")]
    Frame(String),
    #[error("frame {frame}: basis hash differs from the decoder's basis")]
    BasisMismatch { frame: usize },
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Worker pool sized by `RINGRS_THREADS` when set, otherwise rayon's default.
pub fn thread_pool() -> Result<rayon::ThreadPool, Error> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("RINGRS_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| Error::Config(format!("RINGRS_THREADS={:?} is not a count", v)))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| Error::Config(e.to_string()))
}
