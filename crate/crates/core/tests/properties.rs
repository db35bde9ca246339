use proptest::prelude::*;

use segre::arith::{coprime_basis, frac, squarefree_decomposition, Poly, QMatrix, Rational};
use segre::cli::{parse_quadratic_form, render_form};
use segre::symbol::{compute_symbol, random_instance, Group, SegreSymbol};
use segre::{catalog, class_degree, SingularityType};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| frac(n, d))
}

fn symmetric5() -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(rational(), 15).prop_map(|upper| {
        let mut m = QMatrix::zeros(5, 5);
        let pairs = (0..5).flat_map(|i| (i..5).map(move |j| (i, j)));
        for ((i, j), c) in pairs.zip(upper) {
            m[(i, j)] = c.clone();
            m[(j, i)] = c;
        }
        m
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..=5, 1..5).prop_map(|c| Poly::from_ints(&c))
}

fn symbol() -> impl Strategy<Value = SegreSymbol> {
    prop::collection::vec(prop::collection::vec(1u32..=4, 1..=3), 1..=4)
        .prop_map(|groups| SegreSymbol::new(groups.into_iter().map(Group::new).collect()))
}

proptest! {
    #[test]
    fn form_render_round_trip(m in symmetric5()) {
        prop_assume!(!m.is_zero());
        let text = render_form(&m);
        let parsed = parse_quadratic_form(&text).unwrap();
        prop_assert_eq!(parsed.matrix, m);
    }

    #[test]
    fn symbol_text_round_trip(s in symbol()) {
        let text = s.to_string();
        let back: SegreSymbol = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        let c = s.canonicalize().unwrap();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(&c, &s);
        prop_assert_eq!(c.weight(), s.weight());
    }

    #[test]
    fn gcd_divides_both(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert!(g.is_monic());
    }

    #[test]
    fn squarefree_decomposition_multiplies_back(roots in prop::collection::vec(-3i64..=3, 1..7)) {
        let p = roots.iter().fold(Poly::one(), |acc, &r| &acc * &Poly::linear(&frac(r, 1)));
        let parts = squarefree_decomposition(&p).unwrap();
        let back = parts.iter().fold(Poly::one(), |acc, (f, m)| &acc * &f.pow(*m));
        prop_assert_eq!(back, p);
        let bases: Vec<Poly> = parts.into_iter().map(|(f, _)| f).collect();
        let basis = coprime_basis(&bases).unwrap();
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                prop_assert!(a.gcd(b).is_one());
            }
        }
    }

    #[test]
    fn class_formula_is_additive(ns in prop::collection::vec(1u32..=4, 0..4)) {
        let sing: Vec<SingularityType> = ns.iter().map(|&n| SingularityType::A(n)).collect();
        let euler: u32 = ns.iter().map(|n| n + 1).sum();
        match class_degree(&sing) {
            Ok(c) => prop_assert_eq!(c + euler, 12),
            Err(_) => prop_assert!(euler > 12),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn congruence_preserves_symbol(index in 0usize..16, seed in any::<u64>()) {
        let s = &catalog()[index].symbol;
        let p = random_instance(s, seed).unwrap();
        prop_assert_eq!(&compute_symbol(&p).unwrap(), s);
    }
}
