//! XOR-count comparison between the ring code and the split-symbol field
//! baseline on identical data and error streams.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use ringrs_core::meter::STAGES;
use ringrs_core::{BaselineCodec, CodeParams, RingCode, RingElement, XorMeter};
use serde::Serialize;

use crate::basis_file::basis_hash;
use crate::Error;

pub const CHANNEL: &str = "per trial: distinct uniform positions, uniform nonzero (p-1)-bit error value at each, \
same pattern applied to both codecs";
pub const INVERSION_ACCOUNTING: &str = "data-dependent inverses: reduce to each factor, invert by exponentiation \
with counted field multiplications, recombine with counted idempotent products";

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub p: u32,
    pub mu: u32,
    pub trials: usize,
    pub errors: usize,
    pub seed: u64,
    pub basis: Option<Vec<RingElement>>,
}

/// Averages per stage, with the counter names of [`XorMeter`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StageAverages {
    pub encoding: f64,
    pub syndrome: f64,
    pub key_equation: f64,
    pub chien_search: f64,
    pub formal_derivative: f64,
    pub forney: f64,
    pub total_decoding: f64,
}

impl StageAverages {
    fn from_total(m: &XorMeter, trials: usize) -> Self {
        let t = trials as f64;
        StageAverages {
            encoding: m.encoding as f64 / t,
            syndrome: m.syndrome as f64 / t,
            key_equation: m.key_equation as f64 / t,
            chien_search: m.chien_search as f64 / t,
            formal_derivative: m.formal_derivative as f64 / t,
            forney: m.forney as f64 / t,
            total_decoding: m.total_decoding() as f64 / t,
        }
    }

    pub fn values(&self) -> [f64; 7] {
        [
            self.encoding,
            self.syndrome,
            self.key_equation,
            self.chien_search,
            self.formal_derivative,
            self.forney,
            self.total_decoding,
        ]
    }

    pub fn get(&self, stage: &str) -> Option<f64> {
        STAGES.iter().position(|&s| s == stage).map(|i| self.values()[i])
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamsEcho {
    pub p: u32,
    pub mu: u32,
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub errors: usize,
    pub trials: usize,
    pub seed: u64,
    pub basis_hash: String,
    pub field_modulus: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageRow {
    pub stage: &'static str,
    pub ring: f64,
    pub field: f64,
    pub reduction_percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub params: ParamsEcho,
    pub channel: &'static str,
    pub inversion_accounting: &'static str,
    pub ring: StageAverages,
    pub field: StageAverages,
    pub stages: Vec<StageRow>,
    pub ring_decode_failures: usize,
    pub field_decode_failures: usize,
}

impl BenchReport {
    pub fn reduction(&self, stage: &str) -> Option<f64> {
        self.stages.iter().find(|r| r.stage == stage).map(|r| r.reduction_percent)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> Result<String, Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.stages {
            w.serialize(row)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }
}

struct Trial {
    ring: XorMeter,
    field: XorMeter,
    ring_ok: bool,
    field_ok: bool,
}

fn symbol(rng: &mut ChaCha8Rng, p: u32, nonzero: bool) -> RingElement {
    let bits = if nonzero { rng.gen_range(1..1u64 << (p - 1)) } else { rng.gen_range(0..1u64 << (p - 1)) };
    RingElement::new(p, bits).expect("below bit p-1")
}

fn run_trial(ring: &RingCode, field: &BaselineCodec, cfg: &BenchConfig, trial: u64) -> Result<Trial, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial);
    let p = cfg.p;
    let data: Vec<RingElement> = (0..ring.k()).map(|_| symbol(&mut rng, p, false)).collect();
    let n = ring.n();
    let mut order: Vec<usize> = (0..n).collect();
    let mut errors = Vec::with_capacity(cfg.errors);
    for i in 0..cfg.errors {
        let j = rng.gen_range(i..n);
        order.swap(i, j);
        errors.push((order[i], symbol(&mut rng, p, true).bits()));
    }
    let corrupt = |word: &[RingElement]| -> Vec<RingElement> {
        let mut out = word.to_vec();
        for &(l, e) in &errors {
            out[l] = RingElement::new(p, out[l].bits() ^ e).expect("canonical xor stays below bit p-1");
        }
        out
    };

    let mut rm = XorMeter::default();
    let cw = ring.encode(&data, &mut rm)?;
    let ring_ok = matches!(ring.decode(&corrupt(&cw.symbols), &mut rm), Ok(o) if o.data == data);

    let mut fm = XorMeter::default();
    let cw = field.encode(&data, &mut fm)?;
    let field_ok = matches!(field.decode(&corrupt(&cw.symbols), &mut fm), Ok(o) if o.data == data);

    Ok(Trial { ring: rm, field: fm, ring_ok, field_ok })
}

fn modulus_string(f: ringrs_core::Gf2Poly) -> String {
    let mut terms = Vec::new();
    for i in 0..128 {
        if (f.0 >> i) & 1 == 1 {
            terms.push(match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{}", i),
            });
        }
    }
    terms.join("+")
}

/// Runs `trials` independent trials in parallel; the fold is in trial order,
/// so the report only depends on the configuration.
pub fn run_benchmark(cfg: &BenchConfig) -> Result<BenchReport, Error> {
    if cfg.trials == 0 {
        return Err(Error::Config("trials must be at least 1".into()));
    }
    let params = CodeParams::new(cfg.p, cfg.mu)?;
    if cfg.errors > params.capability() {
        return Err(Error::Config(format!(
            "{} errors exceed the capability 2^(mu-1) = {}",
            cfg.errors,
            params.capability()
        )));
    }
    let ring = RingCode::ring(&params, cfg.basis.clone())?;
    let field = BaselineCodec::for_ring(cfg.p, params.m, cfg.mu)?;

    let trials: Vec<Trial> =
        (0..cfg.trials as u64).into_par_iter().map(|t| run_trial(&ring, &field, cfg, t)).collect::<Result<_, _>>()?;
    let mut rsum = XorMeter::default();
    let mut fsum = XorMeter::default();
    let (mut rfail, mut ffail) = (0, 0);
    for t in &trials {
        rsum += t.ring;
        fsum += t.field;
        rfail += !t.ring_ok as usize;
        ffail += !t.field_ok as usize;
    }
    let r = StageAverages::from_total(&rsum, cfg.trials);
    let f = StageAverages::from_total(&fsum, cfg.trials);
    let stages = STAGES
        .iter()
        .zip(r.values().iter().zip(f.values()))
        .map(|(&stage, (&ring, field))| StageRow {
            stage,
            ring,
            field,
            reduction_percent: if field == 0.0 { 0.0 } else { 100.0 * (1.0 - ring / field) },
        })
        .collect();
    let hash = basis_hash(cfg.p, ring.basis().v());
    Ok(BenchReport {
        params: ParamsEcho {
            p: cfg.p,
            mu: cfg.mu,
            m: params.m,
            n: params.n(),
            k: params.k(),
            t: params.t(),
            errors: cfg.errors,
            trials: cfg.trials,
            seed: cfg.seed,
            basis_hash: hash.iter().map(|b| format!("{:02x}", b)).collect(),
            field_modulus: modulus_string(field.modulus()),
        },
        channel: CHANNEL,
        inversion_accounting: INVERSION_ACCOUNTING,
        ring: r,
        field: f,
        stages,
        ring_decode_failures: rfail,
        field_decode_failures: ffail,
    })
}
