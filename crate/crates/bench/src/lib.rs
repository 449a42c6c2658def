//! Synthetic inputs shared by the benchmarks.

use tser::{Split, TimeSeriesDataset, TimeSeriesInstance};

/// `n` instances of `dims` smooth noisy-looking dimensions of length `len`.
/// Deterministic for a given `seed`.
pub fn synthetic_dataset(n: usize, dims: usize, len: usize, seed: u64) -> TimeSeriesDataset {
    let mut state = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let instances = (0..n)
        .map(|_| {
            let phase = next() * 6.0;
            let amp = 0.5 + next();
            let dimensions = (0..dims)
                .map(|d| {
                    (0..len)
                        .map(|t| amp * ((t as f64 / 8.0) + phase + d as f64).sin() + 0.1 * (next() - 0.5))
                        .collect()
                })
                .collect();
            TimeSeriesInstance::new(dimensions, amp * 10.0 + phase).expect("valid instance")
        })
        .collect();
    TimeSeriesDataset::new("synthetic", Split::Train, instances)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_determinism() {
        let a = synthetic_dataset(5, 2, 30, 1);
        assert_eq!((a.len(), a.n_dimensions(), a.series_length()), (5, Some(2), Some(30)));
        assert_eq!(a, synthetic_dataset(5, 2, 30, 1));
        assert_ne!(a, synthetic_dataset(5, 2, 30, 2));
    }
}
