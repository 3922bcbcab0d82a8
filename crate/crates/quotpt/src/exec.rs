//! Fan-out helpers for sums and sweeps over independent work items.
//!
//! With the `parallel` feature the work is distributed via rayon; without
//! it everything runs sequentially. Results are exact and combined by
//! associative addition, so both paths produce identical output.

/// Map `f` over `items` and collect, optionally in parallel. Ordering of
/// the output matches the input either way.
pub fn map_collect<T, U, F>(items: Vec<T>, parallel: bool, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    let _ = parallel;
    items.into_iter().map(f).collect()
}

/// True when the crate was built with the rayon backend.
pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}
