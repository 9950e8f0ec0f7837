//! Invariant suites runnable from the command line: exhaustive at p = 7,
//! randomized at p = 23.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringrs_core::transform::{fft, ifft};
use ringrs_core::{CodeParams, Crt, Gf2Poly, RingCode, RingElement, XorMeter};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

fn suite(name: &'static str, cases: impl Iterator<Item = bool>) -> SuiteResult {
    let (mut n, mut bad) = (0, 0);
    for ok in cases {
        n += 1;
        bad += !ok as usize;
    }
    SuiteResult { name, cases: n, failures: bad }
}

fn schoolbook(a: u64, b: u64, p: u32) -> Gf2Poly {
    Gf2Poly(a as u128).mul(Gf2Poly(b as u128)).rem(Gf2Poly::all_ones(p))
}

fn ring(p: u32, bits: u64) -> RingElement {
    RingElement::new(p, bits).expect("in range")
}

fn mul_suite(p: u32, pairs: Vec<(u64, u64)>) -> SuiteResult {
    let name = if p == 7 { "p7 multiplication" } else { "p23 multiplication" };
    suite(
        name,
        pairs.into_iter().map(move |(a, b)| {
            let mut xors = 0;
            let prod = ring(p, a).mul_cyclic(&ring(p, b), &mut xors).unwrap();
            let want = schoolbook(a, b, p);
            prod.canonicalize().bits() as u128 == want.0 && xors == p as u64 * a.count_ones() as u64
        }),
    )
}

fn crt_suite(name: &'static str, crt: &Crt, pairs: Vec<(u64, u64)>) -> SuiteResult {
    let p = crt.p();
    let t = crt.t();
    let idem_ok = (0..t).all(|i| {
        (0..t).all(|j| {
            let prod = crt.idempotent(i).mul_cyclic(&crt.idempotent(j), &mut 0).unwrap();
            if i == j {
                prod.eq_mod_mp(&crt.idempotent(i))
            } else {
                prod.is_zero_mod_mp()
            }
        })
    });
    let cases = pairs.into_iter().map(move |(a, b)| {
        let (ea, eb) = (ring(p, a), ring(p, b));
        let (pa, pb) = (crt.phi(&ea), crt.phi(&eb));
        let sum = crt.phi(&ring(p, a ^ b));
        let prod = crt.phi(&ea.mul_cyclic(&eb, &mut 0).unwrap());
        let hom = (0..t).all(|k| {
            let f = crt.field(k);
            sum.components[k] == pa.components[k] ^ pb.components[k]
                && prod.components[k] == f.mul_raw(pa.components[k], pb.components[k])
        });
        let back = crt.phi_inv(&pa).map(|r| r.eq_mod_mp(&ea)).unwrap_or(false);
        hom && back
    });
    suite(name, cases.chain(std::iter::once(idem_ok)))
}

fn transform_suite(name: &'static str, code: &RingCode, rng: &mut ChaCha8Rng, per_block: usize) -> SuiteResult {
    let alg = code.algebra();
    let p = alg.p();
    let mut results = Vec::new();
    for tau in 0..=code.mu() {
        for b in (0..code.n()).step_by(1 << tau) {
            for _ in 0..per_block {
                let f: Vec<RingElement> = (0..1 << tau).map(|_| ring(p, rng.gen::<u64>() & ((1 << p) - 1))).collect();
                let mut x = f.clone();
                let ok = fft(alg, code.basis(), &mut x, tau, b, &mut 0).is_ok()
                    && ifft(alg, code.basis(), &mut x, tau, b, &mut 0).is_ok()
                    && x.iter().zip(&f).all(|(a, c)| a.eq_mod_mp(c));
                results.push(ok);
            }
        }
    }
    suite(name, results.into_iter())
}

fn data(code: &RingCode, rng: &mut ChaCha8Rng) -> Vec<RingElement> {
    let p = code.algebra().p();
    (0..code.k()).map(|_| ring(p, rng.gen_range(0..1u64 << (p - 1)))).collect()
}

/// Every single-symbol error at every position, p = 7.
fn single_error_suite(code: &RingCode, rng: &mut ChaCha8Rng) -> SuiteResult {
    let d = data(code, rng);
    let cw = code.encode(&d, &mut XorMeter::default()).unwrap();
    let mut results = Vec::new();
    for l in 0..code.n() {
        for e in 1..64u64 {
            let mut r = cw.symbols.clone();
            r[l] = ring(7, r[l].bits() ^ e);
            results.push(matches!(code.decode(&r, &mut XorMeter::default()), Ok(o) if o.data == d));
        }
    }
    suite("p7 single errors, every position and value", results.into_iter())
}

fn round_trip_suite(name: &'static str, code: &RingCode, rng: &mut ChaCha8Rng, trials: usize) -> SuiteResult {
    let p = code.algebra().p();
    let cap = 1usize << (code.mu() - 1);
    let results: Vec<bool> = (0..trials)
        .map(|_| {
            let d = data(code, rng);
            let cw = code.encode(&d, &mut XorMeter::default()).unwrap();
            let mut r = cw.symbols.clone();
            let mut order: Vec<usize> = (0..code.n()).collect();
            for i in 0..cap {
                let j = rng.gen_range(i..code.n());
                order.swap(i, j);
                r[order[i]] = ring(p, r[order[i]].bits() ^ rng.gen_range(1..1u64 << (p - 1)));
            }
            matches!(code.decode(&r, &mut XorMeter::default()), Ok(o) if o.data == d)
        })
        .collect();
    suite(name, results.into_iter())
}

pub fn run_selftest(seed: u64) -> Vec<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    let all7: Vec<(u64, u64)> = (0..128).flat_map(|a| (0..128).map(move |b| (a, b))).collect();
    out.push(mul_suite(7, all7.clone()));
    let crt7 = Crt::new(7).unwrap();
    out.push(crt_suite("p7 crt", &crt7, all7));
    let code7 = RingCode::ring(&CodeParams::new(7, 2).unwrap(), None).unwrap();
    out.push(transform_suite("p7 transforms", &code7, &mut rng, 4));
    out.push(single_error_suite(&code7, &mut rng));

    let rand23: Vec<(u64, u64)> =
        (0..10_000).map(|_| (rng.gen_range(0..1u64 << 23), rng.gen_range(0..1u64 << 23))).collect();
    out.push(mul_suite(23, rand23.clone()));
    let crt23 = Crt::new(23).unwrap();
    out.push(crt_suite("p23 crt", &crt23, rand23));
    let code23 = RingCode::ring(&CodeParams::new(23, 6).unwrap(), None).unwrap();
    out.push(transform_suite("p23 transforms", &code23, &mut rng, 1));
    out.push(round_trip_suite("p23 round trips at capability", &code23, &mut rng, 20));
    out
}
