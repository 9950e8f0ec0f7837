mod common;

use std::sync::OnceLock;

use common::*;
use proptest::prelude::*;
use ringrs_core::algebra::CodeAlgebra;
use ringrs_core::transform::{fft, ifft};
use ringrs_core::{RingCode, RingElement, XorMeter};

fn p23() -> &'static RingCode {
    static CODE: OnceLock<RingCode> = OnceLock::new();
    CODE.get_or_init(|| ring_code(23, 6))
}

fn p7() -> &'static RingCode {
    static CODE: OnceLock<RingCode> = OnceLock::new();
    CODE.get_or_init(|| ring_code(7, 2))
}

fn elems(p: u32, n: usize) -> impl Strategy<Value = Vec<RingElement>> {
    prop::collection::vec(0u64..(1 << p), n).prop_map(move |v| v.into_iter().map(|b| RingElement::new(p, b).unwrap()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ifft_inverts_fft(f in elems(23, 64), block in 0usize..32) {
        let code = p23();
        let mut x = f.clone();
        fft(code.algebra(), code.basis(), &mut x, 6, block * 64, &mut 0).unwrap();
        ifft(code.algebra(), code.basis(), &mut x, 6, block * 64, &mut 0).unwrap();
        prop_assert!(eq_ring(&x, &f));
    }

    #[test]
    fn fft_is_linear(f in elems(23, 16), g in elems(23, 16), block in 0usize..128) {
        let code = p23();
        let alg = code.algebra();
        let mut s: Vec<_> = f.iter().zip(&g).map(|(&a, &b)| alg.add_raw(a, b)).collect();
        let (mut x, mut y) = (f.clone(), g.clone());
        for v in [&mut x, &mut y, &mut s] {
            fft(alg, code.basis(), v, 4, block * 16, &mut 0).unwrap();
        }
        for i in 0..16 {
            prop_assert!(s[i].eq_mod_mp(&alg.add_raw(x[i], y[i])));
        }
    }

    #[test]
    fn decode_corrects_up_to_capability(data in prop::collection::vec(0u64..64, 4), seed in any::<u64>(), errs in 0usize..=2) {
        let code = p7();
        let data: Vec<RingElement> = data.into_iter().map(|x| RingElement::new(7, x).unwrap()).collect();
        let mut meter = XorMeter::default();
        let cw = code.encode(&data, &mut meter).unwrap();
        let (recv, _) = corrupt(&mut rng(seed), &cw.symbols, errs);
        let out = code.decode(&recv, &mut meter).unwrap();
        prop_assert!(eq_ring(&out.data, &data));
        prop_assert_eq!(meter.total_decoding(), meter.decode_stages().iter().sum::<u64>());
    }
}
