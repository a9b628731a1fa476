//! Execution strategy for grid sweeps.
//!
//! Every sweep maps an index range through a pure function and collects the
//! results in index order, so parallel and sequential execution produce
//! identical output. With the `parallel` feature the default path fans out on
//! rayon; `map_indexed_seq` is always available as the sequential reference.

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, E, F>(n: usize, f: F) -> Result<Vec<T>, E>
where
    T: Send,
    E: Send,
    F: Fn(usize) -> Result<T, E> + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, E, F>(n: usize, f: F) -> Result<Vec<T>, E>
where
    F: Fn(usize) -> Result<T, E>,
{
    (0..n).map(f).collect()
}

pub(crate) fn map_indexed_seq<T, E, F>(n: usize, f: F) -> Result<Vec<T>, E>
where
    F: Fn(usize) -> Result<T, E>,
{
    (0..n).map(f).collect()
}
