/// Pairwise (cascade) summation; error grows like O(log n) instead of O(n).
pub(crate) fn pairwise_sum(xs: &[f64]) -> f64 {
    const BLOCK: usize = 8;
    if xs.len() <= BLOCK {
        return xs.iter().sum();
    }
    let (lo, hi) = xs.split_at(xs.len() / 2);
    pairwise_sum(lo) + pairwise_sum(hi)
}

/// `base^exp` by repeated multiplication, with 0^0 = 1.
pub(crate) fn int_pow(base: f64, exp: usize) -> f64 {
    let mut acc = 1.0;
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub(crate) fn max_abs(xs: &[f64]) -> f64 {
    xs.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive_on_exact_data() {
        let xs: Vec<f64> = (1..=100).map(f64::from).collect();
        assert_eq!(pairwise_sum(&xs), 5050.0);
        assert_eq!(pairwise_sum(&[]), 0.0);
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(int_pow(0.0, 0), 1.0);
        assert_eq!(int_pow(0.0, 3), 0.0);
        assert_eq!(int_pow(-3.0, 3), -27.0);
    }
}
