use focal_core::exactmath::gcd::are_associates;
use focal_core::exactmath::{
    char_poly, format_rational, has_multiple_components, int, parse_rational, poly_gcd, rat, restrict,
    squarefree_part, Matrix,
};
use focal_core::{MultiPoly, RMatrix, Rational};
use proptest::prelude::*;

const NVARS: usize = 3;

fn small() -> impl Strategy<Value = i64> {
    -4i64..=4
}

fn square(n: usize) -> impl Strategy<Value = RMatrix> {
    prop::collection::vec(small(), n * n)
        .prop_map(move |v| Matrix::from_fn(n, n, |i, j| int(v[i * n + j])))
}

fn poly(max_terms: usize, max_deg: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, NVARS), small()), 1..=max_terms)
        .prop_map(|terms| MultiPoly::from_terms(NVARS, terms.into_iter().map(|(e, c)| (e, int(c)))).unwrap())
}

fn linear_form() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(small(), NVARS)
        .prop_filter("nonzero", |v| v.iter().any(|&c| c != 0))
        .prop_map(|v| MultiPoly::linear(&v.into_iter().map(int).collect::<Vec<_>>()))
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((small(), 1i64..=3), NVARS).prop_map(|v| v.into_iter().map(|(n, d)| rat(n, d)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_are_canonical(n in -50i64..50, d in 1i64..50, k in 1i64..20) {
        let x = rat(n * k, d * k);
        prop_assert_eq!(&x, &rat(n, d));
        prop_assert!(x.denom() > &0.into());
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn determinant_vanishes_on_repeated_rows(m in square(4), from in 0usize..4, to in 0usize..4) {
        prop_assume!(from != to);
        let mut rows = m.to_rows();
        rows[to] = rows[from].clone();
        prop_assert_eq!(Matrix::from_rows(rows).unwrap().det().unwrap(), int(0));
    }

    #[test]
    fn determinant_is_multiplicative(a in square(3), b in square(3)) {
        prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn gcd_keeps_a_common_factor(a in poly(3, 2), b in poly(3, 2), c in linear_form()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (ac, bc) = (&a * &c, &b * &c);
        let g = poly_gcd(&ac, &bc);
        prop_assert!(g.div_exact(&c).is_some());
        prop_assert!(ac.div_exact(&g).is_some());
        prop_assert!(bc.div_exact(&g).is_some());
        prop_assert!(are_associates(&poly_gcd(&bc, &ac), &g));
    }

    #[test]
    fn square_factor_is_detected(p in linear_form(), q in linear_form()) {
        prop_assume!(!are_associates(&p, &q));
        let f = &(&p * &p) * &q;
        prop_assert!(has_multiple_components(&f).unwrap());
        prop_assert!(are_associates(&squarefree_part(&f).unwrap(), &(&p * &q)));
        prop_assert!(!has_multiple_components(&(&p * &q)).unwrap());
    }

    #[test]
    fn characteristic_polynomial_is_similarity_invariant(m in square(3), p in square(3)) {
        let p_inv = p.inverse();
        prop_assume!(p_inv.is_some());
        let similar = &(&p * &m) * &p_inv.unwrap();
        prop_assert_eq!(char_poly(&similar).unwrap(), char_poly(&m).unwrap());
    }

    #[test]
    fn restriction_agrees_with_evaluation(f in poly(4, 3), x in point(), d in point(), t in -5i64..5) {
        let line = restrict(&f, &x, &d).unwrap();
        let t = int(t);
        let on_line: Vec<Rational> = x.iter().zip(&d).map(|(a, b)| a + &t * b).collect();
        prop_assert_eq!(line.eval(&t), f.eval(&on_line));
    }
}
