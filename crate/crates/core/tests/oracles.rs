//! Golden values frozen from an independent exact computation (a separate
//! single-mode Poincare-Lindstedt implementation in a computer algebra
//! system), plus closed-form oracles derived by hand.

use std::f64::consts::PI;

use cylwave::duffing;
use cylwave::modes::{interaction_coeff, interaction_coeff_quadrature};
use cylwave::pdesim::{energy_report, SpectralState};
use cylwave::rational::{int, parse_rational, rat, Rational};
use cylwave::resonant::{ExpansionConfig, PerturbativeState};
use cylwave::trigpoly::{Parity, SecularTrigPoly};

fn q(text: &str) -> Rational {
    parse_rational(text).unwrap()
}

fn cos_series(coeffs: &[(u32, &str)]) -> SecularTrigPoly {
    coeffs.iter().fold(SecularTrigPoly::zero(), |acc, (w, c)| {
        acc + SecularTrigPoly::cos(*w).scale(&q(c))
    })
}

#[test]
fn zero_data_shifts_to_order_eleven() {
    let s = PerturbativeState::expand(11, ExpansionConfig::default()).unwrap();
    let expected = [
        "1",
        "0",
        "3/4",
        "0",
        "-3/128",
        "0",
        "9/512",
        "0",
        "-1779/131072",
        "0",
        "5643/524288",
    ];
    let got: Vec<String> = s.thetas().iter().map(|t| t.to_string()).collect();
    assert_eq!(got, expected);
}

#[test]
fn zero_data_polynomials() {
    let s = PerturbativeState::expand(11, ExpansionConfig::default()).unwrap();
    let golden: [(usize, &[(u32, &str)]); 5] = [
        (3, &[(1, "-1/32"), (3, "1/32")]),
        (5, &[(1, "23/1024"), (3, "-3/128"), (5, "1/1024")]),
        (
            7,
            &[
                (1, "-547/32768"),
                (3, "297/16384"),
                (5, "-3/2048"),
                (7, "1/32768"),
            ],
        ),
        (
            9,
            &[
                (1, "6713/524288"),
                (3, "-15121/1048576"),
                (5, "883/524288"),
                (7, "-9/131072"),
                (9, "1/1048576"),
            ],
        ),
        (
            11,
            &[
                (1, "-42397/4194304"),
                (3, "394701/33554432"),
                (5, "-921/524288"),
                (7, "1757/16777216"),
                (9, "-3/1048576"),
                (11, "1/33554432"),
            ],
        ),
    ];
    for (order, coeffs) in golden {
        assert_eq!(*s.poly(order, 0), cos_series(coeffs), "order {order}");
    }
    for order in [2, 4, 6, 8, 10] {
        assert!(s.poly(order, 0).is_zero(), "order {order}");
    }
}

#[test]
fn free_data_golden() {
    // f_2(0) = 1/2, f_3(0) = 1/5, f_4(0) = -1/3
    let cfg = ExpansionConfig::default()
        .with_free_datum(2, rat(1, 2))
        .with_free_datum(3, rat(1, 5))
        .with_free_datum(4, rat(-1, 3));
    let s = PerturbativeState::expand(7, cfg).unwrap();
    let thetas: Vec<String> = s.thetas().iter().map(|t| t.to_string()).collect();
    assert_eq!(
        thetas,
        ["1", "0", "3/4", "3/4", "297/640", "-127/320", "-3281/12800"]
    );
    let golden: [(usize, &[(u32, &str)]); 6] = [
        (2, &[(1, "1/2")]),
        (3, &[(1, "27/160"), (3, "1/32")]),
        (4, &[(1, "-73/192"), (3, "3/64")]),
        (5, &[(1, "-101/5120"), (3, "3/160"), (5, "1/1024")]),
        (6, &[(1, "663/10240"), (3, "-43/640"), (5, "5/2048")]),
        (
            7,
            &[
                (1, "69413/819200"),
                (3, "-35519/409600"),
                (5, "1/512"),
                (7, "1/32768"),
            ],
        ),
    ];
    for (order, coeffs) in golden {
        assert_eq!(*s.poly(order, 0), cos_series(coeffs), "order {order}");
    }
}

#[test]
fn symbolic_shift_formulas() {
    // theta_3 = (3/2) c2, theta_4 = -3/128 + (3/4) c2^2 + (3/2) c3,
    // theta_5 = (3/2) c2 c3 - (3/32) c2 + (3/2) c4
    for (c2, c3, c4) in [
        (rat(1, 2), rat(0, 1), rat(0, 1)),
        (rat(-2, 7), rat(3, 11), rat(5, 13)),
    ] {
        let cfg = ExpansionConfig::default()
            .with_free_datum(2, c2.clone())
            .with_free_datum(3, c3.clone())
            .with_free_datum(4, c4.clone());
        let s = PerturbativeState::expand(6, cfg).unwrap();
        let th = s.thetas();
        assert_eq!(th[3], rat(3, 2) * &c2);
        assert_eq!(
            th[4],
            rat(-3, 128) + rat(3, 4) * &c2 * &c2 + rat(3, 2) * &c3
        );
        assert_eq!(
            th[5],
            rat(3, 2) * &c2 * &c3 - rat(3, 32) * &c2 + rat(3, 2) * &c4
        );
    }
}

#[test]
fn obstruction_by_hand() {
    // d-part of order 4, mode m: N contains (w theta_2 - 3/(2w)) d cos(w tau),
    // from 3 d cos^2(tau) cos(2 tau) projected with C_001^(1) = 1 (and its
    // analogues); the Duhamel integral turns a cos(w s) into (a/2) tau sin(w tau).
    let s = PerturbativeState::expand(3, ExpansionConfig::default()).unwrap();
    for (m, expected) in [(1, rat(3, 8)), (2, rat(7, 8)), (3, rat(21, 16))] {
        let fd = s.solve_forced_data(4, m).unwrap();
        assert_eq!(fd.obstruction, expected, "m={m}");
        assert_eq!(fd.response.coeff(1, m as u32 + 1, Parity::Sin), expected);
    }
}

#[test]
fn lindstedt_frequency_matches_duffing_period() {
    // classical Lindstedt frequency of x'' + x + x^3 = 0 at amplitude A:
    // 1 + 3A^2/8 - 21 A^4/256 + O(A^6)
    for a in [0.02f64, 0.05] {
        let lindstedt = 1.0 + 3.0 * a * a / 8.0 - 21.0 * a.powi(4) / 256.0;
        let t = duffing::period(a, 64).unwrap();
        assert!((2.0 * PI / t - lindstedt).abs() < 2.0 * a.powi(6), "A={a}");
    }
    // the squared series agrees: (1 + 3A^2/8 - 21A^4/256)^2 = 1 + 3A^2/4 - 3A^4/128 + ...
    let s = PerturbativeState::expand(5, ExpansionConfig::default()).unwrap();
    let a = rat(3, 8);
    let b = rat(-21, 256);
    assert_eq!(s.thetas()[2], &a * int(2));
    assert_eq!(s.thetas()[4], &a * &a + &b * int(2));
}

#[test]
fn interaction_quadrature_oracle_small_table() {
    let golden = [
        ([0, 0, 0, 0], 1),
        ([1, 1, 1, 1], 2),
        ([2, 2, 2, 2], 3),
        ([0, 1, 1, 2], 1),
        ([1, 1, 2, 2], 2),
        ([0, 0, 1, 1], 1),
        ([0, 0, 2, 2], 1),
        ([0, 0, 0, 2], 0),
    ];
    for (idx, value) in golden {
        assert_eq!(
            interaction_coeff(idx[0], idx[1], idx[2], idx[3]),
            value,
            "{idx:?}"
        );
        let quad = interaction_coeff_quadrature(idx[0], idx[1], idx[2], idx[3]);
        assert!((quad - value as f64).abs() < 1e-12);
    }
}

#[test]
fn energy_closed_forms() {
    // f = c sin(psi): potential (1/4) c^4 int sin^2 = pi c^4 / 8
    let c: f64 = 1.3;
    let s = SpectralState::new(vec![c, 0.0, 0.0, 0.0], vec![0.0; 4]).unwrap();
    let r = energy_report(&s, 8);
    assert!((r.potential - PI * c.powi(4) / 8.0).abs() < 1e-13);
    // f = sin(2 psi) = sin(psi) U_1: (1/4) int sin^2 (2cos)^4 = 4 int sin^2 cos^4 = pi / 4
    let s = SpectralState::new(vec![0.0, 1.0, 0.0, 0.0], vec![0.5, 0.0, 0.0, 0.0]).unwrap();
    let r = energy_report(&s, 8);
    assert!((r.potential - PI / 4.0).abs() < 1e-13);
    assert!((r.gradient - PI).abs() < 1e-14);
    assert!((r.kinetic - PI / 16.0).abs() < 1e-15);
}
