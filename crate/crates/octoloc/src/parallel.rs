//! Scoped-thread chunking with order-preserving collection.
//!
//! Work is split into contiguous index chunks, one per worker; results come
//! back in chunk order, so any fold over them is independent of the thread
//! count as long as the per-chunk reduction is.

/// Applies `work` to every index in `0..n`, chunked over up to `threads`
/// workers, returning per-chunk results in index order.
pub(crate) fn chunked<R: Send>(
    n: usize,
    threads: usize,
    work: impl Fn(std::ops::Range<usize>) -> R + Sync,
) -> Vec<R> {
    let threads = threads.max(1).min(n.max(1));
    let chunk = n.div_ceil(threads);
    let ranges: Vec<std::ops::Range<usize>> = (0..threads)
        .map(|t| (t * chunk).min(n)..((t + 1) * chunk).min(n))
        .collect();
    if threads == 1 {
        return ranges.into_iter().map(work).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|r| scope.spawn(|| work(r)))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_every_index_once_in_order() {
        for threads in [1, 2, 3, 8, 100] {
            let sums = chunked(10, threads, |r| r.sum::<usize>());
            assert_eq!(sums.iter().sum::<usize>(), 45, "threads={threads}");
        }
        assert_eq!(chunked(0, 4, |r| r.len()).iter().sum::<usize>(), 0);
    }
}
