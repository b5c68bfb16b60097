//! Data-parallel map over index ranges with a sequential fallback.
//!
//! Every sweep in this crate is embarrassingly parallel: independent checks
//! over a range of `n` or over a list of shapes. With the `parallel` feature
//! (default) the work runs on the rayon global pool; without it the same
//! closure runs in a plain loop. Results are returned in input order either
//! way, so output is byte-identical across both modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `lo..=hi`, preserving order.
pub fn map_range<T, F>(lo: u64, hi: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    if lo > hi {
        return Vec::new();
    }
    #[cfg(feature = "parallel")]
    {
        (lo..=hi).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (lo..=hi).map(f).collect()
    }
}

/// Maps `f` over a slice, preserving order.
pub fn map_slice<'a, S, T, F>(items: &'a [S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&'a S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_order_is_preserved() {
        let out = map_range(3, 9, |n| n * n);
        assert_eq!(out, vec![9, 16, 25, 36, 49, 64, 81]);
    }

    #[test]
    fn empty_range() {
        let out: Vec<u64> = map_range(5, 4, |n| n);
        assert!(out.is_empty());
    }

    #[test]
    fn slice_order_is_preserved() {
        let items = vec!["a", "bb", "ccc"];
        let out = map_slice(&items, |s| s.len());
        assert_eq!(out, vec![1, 2, 3]);
    }
}
