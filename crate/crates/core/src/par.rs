//! Execution policy for partitioned work.
//!
//! With the `parallel` feature (default) partitions are mapped on a rayon
//! pool; without it every policy runs on the calling thread. Results are
//! always returned in partition order, so callers can fold them
//! deterministically regardless of how many workers ran.

/// How partitioned work is executed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    /// Run every partition on the calling thread.
    Sequential,
    /// Use rayon's global pool.
    #[default]
    Parallel,
    /// Use a dedicated pool with exactly this many worker threads.
    Threads(usize),
}

impl Exec {
    /// Policy for a worker count as given on the command line; `1` means sequential.
    pub fn from_workers(workers: Option<usize>) -> Self {
        match workers {
            None => Exec::Parallel,
            Some(0) | Some(1) => Exec::Sequential,
            Some(n) => Exec::Threads(n),
        }
    }
}

/// Maps `f` over `parts`, returning results in input order.
pub fn map_partitions<P, T, F>(parts: Vec<P>, exec: Exec, f: F) -> Vec<T>
where
    P: Send,
    T: Send,
    F: Fn(P) -> T + Sync + Send,
{
    match exec {
        Exec::Sequential => parts.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            parts.into_par_iter().map(f).collect()
        }
        #[cfg(feature = "parallel")]
        Exec::Threads(n) => {
            use rayon::prelude::*;
            match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(|| parts.into_par_iter().map(&f).collect()),
                // pool creation only fails on OS thread limits; fall back to the caller's thread
                Err(_) => parts.into_iter().map(f).collect(),
            }
        }
        #[cfg(not(feature = "parallel"))]
        Exec::Parallel | Exec::Threads(_) => parts.into_iter().map(f).collect(),
    }
}
