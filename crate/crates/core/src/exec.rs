//! Data-parallel helpers with a sequential fallback.
//!
//! `Exec::Parallel` uses rayon when the `parallel` feature is on and degrades to
//! the sequential path otherwise.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    pub fn flat_map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> Vec<U> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().flat_map_iter(f).collect(),
            _ => items.iter().flat_map(f).collect(),
        }
    }

    /// First item (in input order) for which `f` returns `Some`.
    pub fn find_map<T, U, F>(self, items: &[T], f: F) -> Option<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> Option<U> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().find_map_first(f),
            _ => items.iter().find_map(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let v: Vec<u32> = (0..1000).collect();
        let a = Exec::Sequential.map(&v, |x| x * 2);
        let b = Exec::Parallel.map(&v, |x| x * 2);
        assert_eq!(a, b);
        assert_eq!(Exec::Parallel.find_map(&v, |&x| (x > 500).then_some(x)), Some(501));
        assert_eq!(Exec::Sequential.flat_map(&v[..3], |&x| vec![x; 2]), vec![0, 0, 1, 1, 2, 2]);
    }
}
