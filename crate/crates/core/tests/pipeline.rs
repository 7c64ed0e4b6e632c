mod support;

use orientseq::bounds::{sos_bound, sos_bound_oracle, sos_bound_oracle_with_limit};
use orientseq::constructions::{construct, join_negative, ConstructionParams, Variant};
use orientseq::euler::{os2_maximal, os2_starter};
use orientseq::format::{FileFormat, SequenceFile};
use orientseq::lempel::{d_inverse, sos3, sos_general};
use orientseq::{report, Error, RingSequence};

#[test]
fn closed_form_matches_enumeration() {
    for q in 2..=8 {
        for n in 2..=6 {
            let b = sos_bound_oracle(q, n).unwrap();
            let total = b.count_fixed_both
                + b.count_negself
                + b.count_palindromic
                + b.count_antipalindromic
                + b.count_free;
            assert_eq!(total, (q as u128).pow(n));
            assert_eq!(b.bound, sos_bound(q, n).unwrap(), "q={q} n={n}");
        }
    }
}

#[test]
fn oracle_guard_is_configurable() {
    assert!(matches!(
        sos_bound_oracle_with_limit(12, 4, 100),
        Err(Error::ResourceGuard { requested: 20736, .. })
    ));
    assert!(sos_bound_oracle_with_limit(12, 4, 20736).is_ok());
}

#[test]
fn every_generated_starter_is_orientable() {
    for q in 3..=24 {
        let s = os2_starter(q).unwrap();
        let o = support::oracle(s.terms(), q, 2);
        assert!(o.repeat.is_none() && o.reverse.is_none(), "q={q}");
    }
    for q in 5..=14 {
        for (x, y, z) in [(0, 1, 2), (1, 2, 3), (2, q - 2, q - 1)] {
            for lead in [false, true] {
                if lead && x == 0 {
                    continue;
                }
                let s = os2_maximal(q, x, y, z, lead).unwrap();
                let o = support::oracle(s.terms(), q, 2);
                assert!(o.repeat.is_none() && o.reverse.is_none());
            }
        }
    }
}

#[test]
fn constructions_pass_the_oracle() {
    for q in 5..=9 {
        for q_prime in 2 * q - 1..=2 * q + 3 {
            for v in Variant::ALL {
                if !v.admits(q, q_prime) {
                    continue;
                }
                let s = construct(&ConstructionParams::new(v, q, q_prime, 2), None).unwrap();
                let o = support::oracle(s.terms(), q_prime, 2);
                assert!(o.special(), "{v} q={q} q'={q_prime}: {o:?}");
            }
        }
    }
}

#[test]
fn higher_order_starter_pipeline() {
    // an SOS over Z_11 of order 3, folded back to an orientable starter, then doubled
    let s3 = sos3(11).unwrap();
    let joined = join_negative(&s3.embed(23).unwrap(), 3).unwrap();
    assert_eq!(joined.period(), 2 * s3.period());
    assert!(support::oracle(joined.terms(), 23, 3).special());
}

#[test]
fn lifts_from_every_start_are_translates() {
    let base = orientseq::make_u_star(5, 11).unwrap();
    let t0 = d_inverse(&base, 0).unwrap();
    for start in 1..11 {
        let t = d_inverse(&base, start).unwrap();
        let shifted = t0
            .translate(orientseq::Residue::new(start as i64, 11).unwrap())
            .unwrap();
        assert_eq!(t, shifted);
    }
}

#[test]
fn general_construction_levels() {
    let s = sos_general(12, 4).unwrap();
    assert_eq!(s.period(), 5341);
    let r = report(&s, 4).unwrap();
    assert!(r.is_special && r.is_good && r.weight_mod == 1);
    let s = sos_general(14, 3).unwrap();
    assert_eq!(s.period(), 14 * 45 + 1);
    assert!(sos_general(11, 3).is_err());
}

#[test]
fn files_round_trip_through_reports() {
    let s = sos3(11).unwrap();
    for format in [FileFormat::Text, FileFormat::Json] {
        let text = SequenceFile::new(&s, 3).render(format);
        let back = SequenceFile::parse(&text).unwrap();
        assert_eq!(back.render(format), text);
        let reread: RingSequence = back.sequence().unwrap();
        assert_eq!(report(&reread, 3).unwrap(), report(&s, 3).unwrap());
    }
}
