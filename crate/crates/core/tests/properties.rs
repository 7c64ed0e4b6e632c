mod support;

use orientseq::lempel::{d_beta, d_inverse, lift_period};
use orientseq::{report, Residue, RingSequence};
use proptest::prelude::*;

fn ring() -> impl Strategy<Value = RingSequence> {
    (2u32..=16).prop_flat_map(|q| {
        prop::collection::vec(0..q, 1..=60).prop_map(move |t| RingSequence::new(q, t).unwrap())
    })
}

proptest! {
    #[test]
    fn negate_and_reverse_are_involutions(s in ring()) {
        prop_assert_eq!(s.negate().negate(), s.clone());
        prop_assert_eq!(s.reversed().reversed(), s.clone());
        prop_assert_eq!(s.negate().reversed(), s.reversed().negate());
    }

    #[test]
    fn fold_undoes_embed(s in ring(), extra in 0u32..10) {
        let q = s.q();
        let q_prime = 2 * q - 1 + extra;
        prop_assume!(q_prime > q);
        let e = s.embed(q_prime).unwrap();
        prop_assert_eq!(e.fold(q).unwrap(), s);
    }

    #[test]
    fn fold_is_even(s in ring(), q in 2u32..=8) {
        let q_prime = s.q().max(2 * q - 1);
        let t = RingSequence::new(q_prime, s.terms().to_vec()).unwrap();
        prop_assert_eq!(t.negate().fold(q).unwrap(), t.fold(q).unwrap());
    }

    #[test]
    fn weight_identities(s in ring(), k in 0i64..100) {
        let q = s.q() as u64;
        prop_assert_eq!(s.weight() % q, s.weight_mod().value() as u64);
        prop_assert_eq!(s.rotate(k).weight(), s.weight());
        prop_assert_eq!((s.weight() + s.negate().weight()) % q, 0);
        let both = s.concat(&s.negate()).unwrap();
        prop_assert_eq!(both.weight_mod().value(), 0);
        prop_assert_eq!(s.weight_mod().value(), support::weight_mod(s.terms(), s.q()));
    }

    #[test]
    fn translate_shifts_weight(s in ring(), lambda in -50i64..50) {
        let q = s.q();
        let t = s.translate(Residue::new(lambda, q).unwrap()).unwrap();
        let shift = (lambda.rem_euclid(q as i64) as u64 * s.period() as u64) % q as u64;
        prop_assert_eq!(
            t.weight_mod().value() as u64,
            (s.weight_mod().value() as u64 + shift) % q as u64
        );
        let back = t.translate(Residue::new(-lambda, q).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn lempel_round_trip(s in ring(), start in 0u32..16) {
        let start = start % s.q();
        let t = d_inverse(&s, start).unwrap();
        prop_assert_eq!(
            t.period() as u128,
            lift_period(s.period(), s.weight_mod().value(), s.q())
        );
        let back = d_beta(&t, 1).unwrap();
        for (j, &x) in back.terms().iter().enumerate() {
            prop_assert_eq!(x, s.terms()[j % s.period()]);
        }
    }

    #[test]
    fn rotation_preserves_properties(s in ring(), k in 0i64..200, n in 2usize..=4) {
        let a = report(&s, n).unwrap();
        let b = report(&s.rotate(k), n).unwrap();
        prop_assert_eq!(a.is_window, b.is_window);
        prop_assert_eq!(a.is_special, b.is_special);
        prop_assert_eq!(a.is_good, b.is_good);
        prop_assert_eq!(s.rotate(k).canonical(), s.canonical());
    }

    #[test]
    fn checker_matches_oracle(s in ring(), n in 2usize..=5) {
        let o = support::oracle(s.terms(), s.q(), n);
        let r = report(&s, n).unwrap();
        prop_assert_eq!(r.is_window, o.repeat.is_none());
        prop_assert_eq!(r.is_special, o.special());
        prop_assert_eq!(r.is_good, o.good);
    }
}
