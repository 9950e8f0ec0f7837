mod common;

use common::*;
use rand::Rng;
use ringrs_core::algebra::{CodeAlgebra, RingAlgebra};
use ringrs_core::transform::*;
use ringrs_core::{EvalBasis, RingElement};

/// `X̄_i(x)` pointwise from the subspace-polynomial recurrence.
fn xbar_at(alg: &RingAlgebra, basis: &EvalBasis<RingElement>, i: usize, x: RingElement) -> RingElement {
    let mut acc = alg.one();
    for j in 0..basis.m() {
        if (i >> j) & 1 == 1 {
            let s = basis.subspace_eval(alg, j, x).unwrap();
            acc = alg.mul_raw(acc, alg.mul_raw(s, basis.s_norm_inv(j)));
        }
    }
    acc
}

fn naive_eval(alg: &RingAlgebra, basis: &EvalBasis<RingElement>, f: &[RingElement], x: RingElement) -> RingElement {
    f.iter().enumerate().fold(alg.zero(), |acc, (i, &c)| alg.add_raw(acc, alg.mul_raw(c, xbar_at(alg, basis, i, x))))
}

#[test]
fn fft_matches_direct_evaluation_p7_every_shift() {
    let code = ring_code(7, 1);
    let alg = code.algebra();
    let basis = code.basis();
    let omega = omegas(&code);
    let poly = Poly { alg };
    let mut r = rng(1);
    for tau in 0..=3u32 {
        for beta_bits in 0..128u64 {
            let beta = RingElement::new(7, beta_bits).unwrap();
            let f: Vec<RingElement> = (0..1 << tau).map(|_| random_ring(&mut r, 7)).collect();
            let mono = poly.xbar_to_monomial(&omega, basis.v(), &f);
            let mut out = f.clone();
            fft_shifted(alg, basis, &mut out, tau, beta, &mut 0).unwrap();
            for (j, y) in out.iter().enumerate() {
                let want = poly.eval(&mono, alg.add_raw(beta, omega[j]));
                assert!(y.eq_mod_mp(&want), "tau {} beta {:?} j {}", tau, beta, j);
            }
            ifft_shifted(alg, basis, &mut out, tau, beta, &mut 0).unwrap();
            assert!(eq_ring(&out, &f));
        }
    }
}

#[test]
fn block_fft_agrees_with_shifted_fft_p7() {
    let code = ring_code(7, 2);
    let (alg, basis) = (code.algebra(), code.basis());
    let mut r = rng(2);
    for tau in 0..=3u32 {
        for b in (0..8).step_by(1 << tau) {
            let f: Vec<RingElement> = (0..1 << tau).map(|_| random_ring(&mut r, 7)).collect();
            let (mut x, mut y) = (f.clone(), f.clone());
            let (mut cx, mut cy) = (0, 0);
            fft(alg, basis, &mut x, tau, b, &mut cx).unwrap();
            fft_shifted(alg, basis, &mut y, tau, basis.omega(b).unwrap(), &mut cy).unwrap();
            assert!(eq_ring(&x, &y));
            assert_eq!(cx, cy);
            ifft(alg, basis, &mut x, tau, b, &mut 0).unwrap();
            assert!(eq_ring(&x, &f));
        }
    }
}

#[test]
fn fft_random_cases_p23() {
    let code = ring_code(23, 6);
    let (alg, basis) = (code.algebra(), code.basis());
    let mut r = rng(3);
    for case in 0..100 {
        let tau = r.gen_range(0..=5u32);
        let b = r.gen_range(0..(2048 >> tau)) << tau;
        let f: Vec<RingElement> = (0..1 << tau).map(|_| random_ring(&mut r, 23)).collect();
        let mut out = f.clone();
        fft(alg, basis, &mut out, tau, b, &mut 0).unwrap();
        for (j, y) in out.iter().enumerate() {
            let want = naive_eval(alg, basis, &f, basis.omega(b + j).unwrap());
            assert!(y.eq_mod_mp(&want), "case {}", case);
        }
        ifft(alg, basis, &mut out, tau, b, &mut 0).unwrap();
        assert!(eq_ring(&out, &f));
    }
}

#[test]
fn fft_is_componentwise_field_fft() {
    for (p, mu) in [(7u32, 2u32), (23, 6)] {
        let code = ring_code(p, mu);
        let (alg, basis) = (code.algebra(), code.basis());
        let mut r = rng(4);
        for k in 0..alg.components() {
            let fc = component_code(&code, k);
            for _ in 0..10 {
                let tau = mu;
                let b = r.gen_range(0..(code.n() >> tau)) << tau;
                let f: Vec<RingElement> = (0..1 << tau).map(|_| random_ring(&mut r, p)).collect();
                let mut x = f.clone();
                fft(alg, basis, &mut x, tau, b, &mut 0).unwrap();
                let mut y: Vec<_> = f.iter().map(|&a| comp(alg, a, k)).collect();
                fft(fc.algebra(), fc.basis(), &mut y, tau, b, &mut 0).unwrap();
                for (a, c) in x.iter().zip(&y) {
                    assert_eq!(comp(alg, *a, k), *c);
                }
            }
        }
    }
}

#[test]
fn butterfly_cost_law() {
    let code = ring_code(23, 6);
    let (alg, basis) = (code.algebra(), code.basis());
    let mut r = rng(5);
    for tau in 0..=6u32 {
        let b = r.gen_range(0..(2048 >> tau)) << tau;
        let mut expected = 0u64;
        let mut mults = 0u64;
        for level in 1..=tau {
            let half = 1usize << (level - 1);
            for o in (0..1usize << tau).step_by(2 * half) {
                let c = basis.twiddles().get(level, b | o);
                assert!(c.weight() <= 11);
                let adds = if c.weight() == 0 { 1 } else { 2 };
                expected += half as u64 * (23 * c.weight() as u64 + adds * 23);
                mults += half as u64;
            }
        }
        assert_eq!(mults, (tau as u64 * (1 << tau)) / 2);
        let mut data: Vec<RingElement> = (0..1 << tau).map(|_| random_ring(&mut r, 23)).collect();
        let mut xors = 0;
        fft(alg, basis, &mut data, tau, b, &mut xors).unwrap();
        assert_eq!(xors, expected);
        let mut xors = 0;
        ifft(alg, basis, &mut data, tau, b, &mut xors).unwrap();
        assert_eq!(xors, expected);
    }
}

#[test]
fn linearity() {
    let code = ring_code(23, 6);
    let (alg, basis) = (code.algebra(), code.basis());
    let mut r = rng(6);
    let f: Vec<RingElement> = (0..64).map(|_| random_ring(&mut r, 23)).collect();
    let g: Vec<RingElement> = (0..64).map(|_| random_ring(&mut r, 23)).collect();
    let mut s: Vec<RingElement> = f.iter().zip(&g).map(|(&a, &b)| alg.add_raw(a, b)).collect();
    let (mut ff, mut gg) = (f.clone(), g.clone());
    fft(alg, basis, &mut ff, 6, 128, &mut 0).unwrap();
    fft(alg, basis, &mut gg, 6, 128, &mut 0).unwrap();
    fft(alg, basis, &mut s, 6, 128, &mut 0).unwrap();
    for i in 0..64 {
        assert!(s[i].eq_mod_mp(&alg.add_raw(ff[i], gg[i])));
    }
}

#[test]
fn tau_zero_and_zero_input() {
    let code = ring_code(7, 1);
    let (alg, basis) = (code.algebra(), code.basis());
    let c = RingElement::new(7, 0b101).unwrap();
    let mut one = vec![c];
    fft(alg, basis, &mut one, 0, 5, &mut 0).unwrap();
    assert_eq!(one, vec![c]);
    let mut z = vec![alg.zero(); 8];
    ifft(alg, basis, &mut z, 3, 0, &mut 0).unwrap();
    assert!(z.iter().all(|x| x.is_zero_mod_mp()));
    assert!(fft(alg, basis, &mut [c; 3], 2, 0, &mut 0).is_err());
    assert!(fft(alg, basis, &mut [c; 4], 2, 2, &mut 0).is_err());
}

#[test]
fn eval_point_matches_fft() {
    let code = ring_code(23, 6);
    let (alg, basis) = (code.algebra(), code.basis());
    let mut r = rng(7);
    for len in [1usize, 2, 5, 33, 64] {
        let f: Vec<RingElement> = (0..len).map(|_| random_ring(&mut r, 23)).collect();
        let mut padded = f.clone();
        padded.resize(64, alg.zero());
        for b in [0usize, 64, 1984] {
            let mut vals = padded.clone();
            fft(alg, basis, &mut vals, 6, b, &mut 0).unwrap();
            for j in [0usize, 1, 17, 63] {
                let y = eval_point(alg, basis, &f, b + j, &mut 0).unwrap();
                assert!(y.eq_mod_mp(&vals[j]), "len {} at {}", len, b + j);
            }
        }
    }
}

#[test]
fn extended_ifft_round_trip() {
    for (p, mu) in [(7u32, 2u32), (23, 6)] {
        let code = ring_code(p, mu);
        let (alg, basis) = (code.algebra(), code.basis());
        let mut r = rng(8);
        for tau in 0..mu {
            for _ in 0..20 {
                let mut f: Vec<RingElement> = (0..=1usize << tau).map(|_| random_ring(&mut r, p)).collect();
                if r.gen_bool(0.5) {
                    f[1 << tau] = alg.one();
                }
                let vals: Vec<RingElement> =
                    (0..=1usize << tau).map(|l| eval_point(alg, basis, &f, l, &mut 0).unwrap()).collect();
                let back = extended_ifft(alg, basis, &vals, tau, &mut 0).unwrap();
                assert!(eq_ring(&back, &f));
            }
        }
        assert!(extended_ifft(alg, basis, &[alg.one(); 3], 2, &mut 0).is_err());
    }
}

#[test]
fn extended_ifft_single_unknown() {
    // tau = 0: f = f0 + X̄_1 with f(omega_0) given
    let code = ring_code(7, 1);
    let (alg, basis) = (code.algebra(), code.basis());
    let f0 = RingElement::new(7, 0b11).unwrap();
    let at1 = alg.add_raw(f0, xbar_at(alg, basis, 1, basis.omega(1).unwrap()));
    let back = extended_ifft(alg, basis, &[f0, at1], 0, &mut 0).unwrap();
    assert!(back[0].eq_mod_mp(&f0));
    assert!(back[1].eq_mod_mp(&alg.one()));
}

#[test]
fn formal_derivative_matches_monomial_rule() {
    let code = ring_code(7, 2);
    let (alg, basis) = (code.algebra(), code.basis());
    let omega = omegas(&code);
    let poly = Poly { alg };
    let mut r = rng(9);
    for len in [1usize, 2, 3, 5, 8] {
        for _ in 0..20 {
            let f: Vec<RingElement> = (0..len).map(|_| random_ring(&mut r, 7)).collect();
            let d = code.formal_derivative(&f, &mut 0);
            let mono = poly.derivative(&poly.xbar_to_monomial(&omega, basis.v(), &f));
            for (l, &w) in omega.iter().enumerate() {
                let got = eval_point(alg, basis, &d, l, &mut 0).unwrap();
                assert!(got.eq_mod_mp(&poly.eval(&mono, w)));
            }
        }
    }
    let constant = code.formal_derivative(&[alg.one()], &mut 0);
    assert!(constant.iter().all(|x| x.is_zero_mod_mp()));
    // X̄_1 = x / v_0 has derivative 1 / v_0
    let d = code.formal_derivative(&[alg.zero(), alg.one()], &mut 0);
    assert!(d[0].eq_mod_mp(&basis.s_norm_inv(0)));
}

#[test]
fn field_fft_p_equals_field() {
    // p = 5: R_5 is the field of 16 elements
    let code = ring_code(5, 2);
    assert_eq!(code.algebra().components(), 1);
    let mut r = rng(10);
    let f: Vec<RingElement> = (0..4).map(|_| random_ring(&mut r, 5)).collect();
    let mut x = f.clone();
    fft(code.algebra(), code.basis(), &mut x, 2, 12, &mut 0).unwrap();
    ifft(code.algebra(), code.basis(), &mut x, 2, 12, &mut 0).unwrap();
    assert!(eq_ring(&x, &f));
}
