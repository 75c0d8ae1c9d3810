//! Data-parallel sweeps. With the `parallel` feature, work items are spread
//! over a rayon pool; without it (or with [`Execution::Sequential`]) they run
//! in order on the calling thread. Results always come back in input order.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Applies `f` to every item, preserving order.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Applies `f` to `lo..hi`, preserving order.
    pub fn map_range<U, F>(self, lo: i64, hi: i64, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(i64) -> U + Sync + Send,
    {
        let items: Vec<i64> = (lo..hi).collect();
        self.map(&items, |&x| f(x))
    }
}

/// Runs `f` with at most `jobs` worker threads (`None` keeps the default pool).
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        #[cfg(feature = "parallel")]
        Some(n) if n > 0 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<i64> = (0..1000).collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            let out = exec.map(&items, |x| x * x);
            assert_eq!(out, items.iter().map(|x| x * x).collect::<Vec<_>>());
        }
        assert_eq!(Execution::default().map_range(3, 6, |x| x + 1), vec![4, 5, 6]);
        assert_eq!(with_jobs(Some(2), || 7), 7);
    }
}
