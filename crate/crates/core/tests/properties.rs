//! Randomized structural laws: scaling symmetries of the polynomial values,
//! the defining convolution, and the group-like laws of series composition,
//! exponentiation, and reciprocals.

use proptest::prelude::*;

use demoivre::algebra::scalar::{rat, rat_int};
use demoivre::algebra::{Rat, Ring};
use demoivre::demoivre::demoivre_eval_recursive;
use demoivre::series::Series;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn small_rat_nonzero() -> impl Strategy<Value = Rat> {
    (1i64..=6, 1i64..=6, prop::bool::ANY)
        .prop_map(|(n, d, neg)| if neg { rat(-n, d) } else { rat(n, d) })
}

fn rat_vec(len: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(small_rat(), len)
}

/// A random series with zero constant term.
fn zero_constant_series(order: usize) -> impl Strategy<Value = Series<Rat>> {
    rat_vec(order + 1).prop_map(|mut coeffs| {
        coeffs[0] = rat_int(0);
        Series::new(coeffs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// `A_{n,k}(lambda a) = lambda^k A_{n,k}(a)`: every term has total
    /// degree k in the arguments.
    #[test]
    fn homogeneous_of_degree_k(
        a in rat_vec(10),
        lambda in small_rat(),
        n in 1u32..=10,
        k_seed in 0u32..1000,
    ) {
        let k = k_seed % n + 1;
        let scaled: Vec<Rat> = a.iter().map(|q| q * &lambda).collect();
        let lhs = demoivre_eval_recursive(n, k, &scaled).unwrap();
        let rhs = Ring::pow(&lambda, k) * demoivre_eval_recursive(n, k, &a).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// `A_{n,k}(lambda a_1, lambda^2 a_2, ...) = lambda^n A_{n,k}(a)`: the
    /// subscripts of each term's factors sum to n.
    #[test]
    fn graded_of_weight_n(
        a in rat_vec(10),
        lambda in small_rat(),
        n in 1u32..=10,
        k_seed in 0u32..1000,
    ) {
        let k = k_seed % n + 1;
        let mut power = rat_int(1);
        let scaled: Vec<Rat> = a
            .iter()
            .map(|q| {
                power *= &lambda;
                q * &power
            })
            .collect();
        let lhs = demoivre_eval_recursive(n, k, &scaled).unwrap();
        let rhs = Ring::pow(&lambda, n) * demoivre_eval_recursive(n, k, &a).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// Peeling one factor off the k-th power:
    /// `A_{n,k} = sum_j a_j A_{n-j,k-1}`.
    #[test]
    fn defining_convolution(
        a in rat_vec(12),
        n in 1u32..=12,
        k_seed in 0u32..1000,
    ) {
        let k = k_seed % n + 1;
        let mut sum = rat_int(0);
        for j in 1..=(n - k + 1) {
            let inner = demoivre_eval_recursive(n - j, k - 1, &a).unwrap();
            sum += &a[j as usize - 1] * inner;
        }
        prop_assert_eq!(demoivre_eval_recursive(n, k, &a).unwrap(), sum);
    }

    /// `(h . g) . f = h . (g . f)` on truncated series.
    #[test]
    fn composition_associates(
        f in zero_constant_series(8),
        g in zero_constant_series(8),
        h in rat_vec(9).prop_map(Series::new),
    ) {
        let left = h.compose(&g).unwrap().compose(&f).unwrap();
        let right = h.compose(&g.compose(&f).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    /// `log(exp f) = f` with exp by recurrence and log by the alternating
    /// polynomial sum.
    #[test]
    fn exp_then_log_round_trip(f in zero_constant_series(8)) {
        let e = f.exp_recurrence().unwrap();
        let back = e.sub(&Series::one(8)).log_series(&rat_int(1)).unwrap();
        prop_assert_eq!(back, f);
    }

    /// `u (1/u) = 1` and `1/(1/u) = u` for units.
    #[test]
    fn reciprocal_round_trip(
        u0 in small_rat_nonzero(),
        tail in rat_vec(8),
    ) {
        let mut coeffs = tail;
        coeffs.insert(0, u0);
        let u = Series::new(coeffs);
        let inv = u.reciprocal().unwrap();
        prop_assert_eq!(u.mul(&inv), Series::one(8));
        prop_assert_eq!(inv.reciprocal().unwrap(), u);
    }

    /// `(1+f)^alpha (1+f)^beta = (1+f)^{alpha+beta}`.
    #[test]
    fn binomial_power_law(
        f in zero_constant_series(8),
        alpha in small_rat(),
        beta in small_rat(),
    ) {
        let product = f.power_binomial(&alpha).unwrap().mul(&f.power_binomial(&beta).unwrap());
        let combined = f.power_binomial(&(&alpha + &beta)).unwrap();
        prop_assert_eq!(product, combined);
    }
}
