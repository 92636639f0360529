use std::ops::Sub;

use super::young::YoungDiagram;

/// `(Δ_j F)(λ) = F(.., λ_j + 1, ..) − F(.., λ_j, ..)`, with `j` 1-based.
pub fn delta_op<T, F>(f: F, j: usize) -> impl Fn(&[i64]) -> T
where
    T: Sub<Output = T>,
    F: Fn(&[i64]) -> T,
{
    assert!(j >= 1, "difference index is 1-based");
    move |args: &[i64]| {
        let mut shifted = args.to_vec();
        shifted[j - 1] += 1;
        f(&shifted) - f(args)
    }
}

/// `Δ_{j_1} .. Δ_{j_m} F`, expanded as a signed sum over the `2^m` shifts.
pub fn iterated_delta<T, F>(f: F, js: &[usize]) -> impl Fn(&[i64]) -> T
where
    T: Sub<Output = T> + std::ops::Add<Output = T>,
    F: Fn(&[i64]) -> T,
{
    let js = js.to_vec();
    assert!(js.iter().all(|&j| j >= 1), "difference index is 1-based");
    move |args: &[i64]| {
        let m = js.len();
        let mut plus: Option<T> = None;
        let mut minus: Option<T> = None;
        for mask in 0u32..(1 << m) {
            let mut shifted = args.to_vec();
            for (bit, &j) in js.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    shifted[j - 1] += 1;
                }
            }
            let value = f(&shifted);
            let slot = if (m - mask.count_ones() as usize) % 2 == 0 { &mut plus } else { &mut minus };
            *slot = Some(match slot.take() {
                Some(acc) => acc + value,
                None => value,
            });
        }
        match (plus, minus) {
            (Some(p), Some(n)) => p - n,
            (Some(p), None) => p,
            _ => unreachable!(),
        }
    }
}

/// `F^sym(ξ) = F(ξ sorted in decreasing order, zeros dropped)`.
pub fn sym_extend<T>(f: impl Fn(&YoungDiagram) -> T, xi: &[i64]) -> T {
    assert!(xi.iter().all(|&x| x >= 0), "sym_extend needs non-negative entries: {xi:?}");
    f(&YoungDiagram::from_unsorted(xi.iter().map(|&x| x as u32).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_differences() {
        let sq = delta_op(|a: &[i64]| a[0] * a[0], 1);
        for x in -3..5 {
            assert_eq!(sq(&[x]), 2 * x + 1);
        }
        let c = delta_op(|_: &[i64]| 7i64, 1);
        assert_eq!(c(&[4]), 0);
        let prod = delta_op(|a: &[i64]| a[0] * a[1], 2);
        assert_eq!(prod(&[5, 9]), 5);
    }

    #[test]
    fn differences_commute() {
        let f = |a: &[i64]| a[0].pow(3) * a[1] * a[1] - 4 * a[0] * a[1].pow(3) + a[0];
        let d12 = delta_op(delta_op(f, 2), 1);
        let d21 = delta_op(delta_op(f, 1), 2);
        let iter = iterated_delta(f, &[1, 2]);
        for x in -2..4 {
            for y in -2..4 {
                assert_eq!(d12(&[x, y]), d21(&[x, y]));
                assert_eq!(d12(&[x, y]), iter(&[x, y]));
            }
        }
        let twice = iterated_delta(f, &[1, 1]);
        let nested = delta_op(delta_op(f, 1), 1);
        assert_eq!(twice(&[3, -1]), nested(&[3, -1]));
    }

    #[test]
    fn symmetric_extension() {
        let f = |l: &YoungDiagram| l.parts().to_vec();
        assert_eq!(sym_extend(f, &[1, 3]), vec![3, 1]);
        assert_eq!(sym_extend(f, &[3, 1]), vec![3, 1]);
        assert_eq!(sym_extend(f, &[2, 2]), vec![2, 2]);
        assert_eq!(sym_extend(f, &[0, 2]), vec![2]);
    }
}
