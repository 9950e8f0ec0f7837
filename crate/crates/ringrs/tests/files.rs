use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringrs::basis_file;
use ringrs::filecodec::FileCodec;
use ringrs::frame::{pack_symbols, symbol_bytes, unpack_symbols, FrameHeader, HEADER_LEN};
use ringrs::Error;
use ringrs_core::RingElement;

fn bytes(len: usize, seed: u64) -> Vec<u8> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| r.gen()).collect()
}

#[test]
fn symbol_packing_round_trips() {
    for p in [5u32, 7, 13, 23, 29] {
        for len in [0usize, 1, 2, 3, 7, 11, 64, 1001] {
            let b = bytes(len, len as u64);
            let s = pack_symbols(&b, p);
            assert!(s.iter().all(|x| x.bits() >> (p - 1) == 0));
            assert_eq!(unpack_symbols(&s, p, len), b, "p = {} len = {}", p, len);
        }
    }
}

#[test]
fn file_round_trip_various_sizes() {
    let codec = FileCodec::new(23, 6, None).unwrap();
    for len in [0usize, 1, 21, 5631, 5632, 5633, 40_000] {
        let data = bytes(len, 7 + len as u64);
        for cpf in [1usize, 3, 16] {
            let enc = codec.encode_stream(&data, cpf).unwrap();
            let rep = codec.decode_stream(&enc).unwrap();
            assert_eq!(rep.bytes, data, "len {} cpf {}", len, cpf);
            assert!(rep.failed_codewords.is_empty() && rep.repaired_codewords.is_empty());
        }
    }
}

#[test]
fn small_code_round_trip() {
    let codec = FileCodec::new(7, 2, None).unwrap();
    for len in [0usize, 1, 2, 5, 100] {
        let data = bytes(len, len as u64);
        let enc = codec.encode_stream(&data, 2).unwrap();
        assert_eq!(codec.decode_stream(&enc).unwrap().bytes, data);
    }
}

/// Corrupts up to `per_word` symbols of every codeword in every frame.
fn corrupt(enc: &mut [u8], per_word: usize, seed: u64) -> usize {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut at = 0;
    let mut hit = 0;
    while at < enc.len() {
        let h = FrameHeader::from_bytes(&enc[at..]).unwrap();
        let sb = symbol_bytes(h.p);
        let body = at + HEADER_LEN;
        for c in 0..h.codewords as usize {
            let base = body + c * h.n() * sb;
            let mut picked: Vec<usize> = Vec::new();
            while picked.len() < per_word {
                let l = r.gen_range(0..h.n());
                if !picked.contains(&l) {
                    picked.push(l);
                }
            }
            for l in picked {
                enc[base + l * sb] ^= r.gen_range(1..=255u8);
                hit += 1;
            }
        }
        at = body + h.body_len();
    }
    hit
}

#[test]
fn repairs_errors_up_to_capability() {
    let codec = FileCodec::new(23, 6, None).unwrap();
    let data = bytes(30_000, 3);
    let mut enc = codec.encode_stream(&data, 4).unwrap();
    corrupt(&mut enc, 32, 9);
    let rep = codec.decode_stream(&enc).unwrap();
    assert!(rep.failed_codewords.is_empty());
    assert_eq!(rep.bytes, data);
    assert!(!rep.repaired_codewords.is_empty());
}

#[test]
fn reports_uncorrectable_codewords() {
    let codec = FileCodec::new(7, 2, None).unwrap();
    let data = bytes(200, 4);
    let mut enc = codec.encode_stream(&data, 2).unwrap();
    // n = 8, four errors per word exceed the capability of 2
    corrupt(&mut enc, 4, 5);
    let rep = codec.decode_stream(&enc).unwrap();
    assert!(!rep.failed_codewords.is_empty());
}

#[test]
fn header_errors_are_reported() {
    let codec = FileCodec::new(23, 6, None).unwrap();
    let enc = codec.encode_stream(&bytes(100, 1), 16).unwrap();

    assert!(matches!(codec.decode_stream(&enc[..20]), Err(Error::Frame(_))));
    assert!(matches!(codec.decode_stream(&enc[..enc.len() - 1]), Err(Error::Frame(_))));
    assert!(matches!(codec.decode_stream(&[]), Err(Error::Frame(_))));

    let mut bad = enc.clone();
    bad[17] ^= 1;
    assert!(matches!(codec.decode_stream(&bad), Err(Error::Frame(_))));

    let mut magic = enc.clone();
    magic[0] = b'X';
    assert!(matches!(codec.decode_stream(&magic), Err(Error::Frame(_))));

    let other = FileCodec::new(23, 5, None).unwrap();
    assert!(matches!(other.decode_stream(&enc), Err(Error::Frame(_))));
}

#[test]
fn basis_mismatch_is_detected() {
    let default = FileCodec::new(7, 1, None).unwrap();
    let enc = default.encode_stream(&bytes(50, 2), 4).unwrap();
    let basis = basis_file::parse("0 1 2\n# second element\n0\n0 3\n", 7).unwrap();
    let custom = match FileCodec::new(7, 1, Some(basis)) {
        Ok(c) => c,
        Err(e) => panic!("basis rejected: {}", e),
    };
    assert_ne!(custom.basis_hash(), default.basis_hash());
    assert!(matches!(custom.decode_stream(&enc), Err(Error::BasisMismatch { frame: 0 })));
    let own = custom.encode_stream(&bytes(50, 2), 4).unwrap();
    assert_eq!(custom.decode_stream(&own).unwrap().bytes, bytes(50, 2));
}

#[test]
fn basis_file_parsing() {
    let v = basis_file::parse("# header\n\n0 2\n1, 4  # trailing\n", 7).unwrap();
    assert_eq!(v, vec![RingElement::new(7, 0b101).unwrap(), RingElement::new(7, 0b10010).unwrap()]);
    assert_eq!(basis_file::parse(&basis_file::format(&v), 7).unwrap(), v);
    assert!(matches!(basis_file::parse("0 7\n", 7), Err(Error::BasisFile { line: 1, .. })));
    assert!(matches!(basis_file::parse("\n2 1\n", 7), Err(Error::BasisFile { line: 2, .. })));
    assert!(matches!(basis_file::parse("a\n", 7), Err(Error::BasisFile { line: 1, .. })));
}

#[test]
fn hash_ignores_representative_choice() {
    let v = vec![RingElement::new(7, 0b0000011).unwrap()];
    let w = vec![RingElement::new(7, 0b1111100).unwrap()];
    assert_eq!(basis_file::basis_hash(7, &v), basis_file::basis_hash(7, &w));
}

fn shape(v: &serde_json::Value) -> serde_json::Value {
    use serde_json::Value;
    match v {
        Value::Object(m) => Value::Object(m.iter().map(|(k, x)| (k.clone(), shape(x))).collect()),
        Value::Array(a) => Value::Array(a.first().map(shape).into_iter().collect()),
        Value::Bool(_) => "bool".into(),
        Value::Number(_) => "number".into(),
        Value::String(_) => "string".into(),
        Value::Null => "null".into(),
    }
}

#[test]
fn bench_report_matches_golden_schema() {
    let cfg = ringrs::bench::BenchConfig { p: 7, mu: 2, trials: 3, errors: 2, seed: 5, basis: None };
    let report = ringrs::bench::run_benchmark(&cfg).unwrap();
    let got: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    let golden: serde_json::Value = serde_json::from_str(include_str!("golden/bench_schema.json")).unwrap();
    assert_eq!(shape(&got), golden);
    let names: Vec<&str> = got["stages"].as_array().unwrap().iter().map(|r| r["stage"].as_str().unwrap()).collect();
    assert_eq!(
        names,
        ["encoding", "syndrome", "key_equation", "chien_search", "formal_derivative", "forney", "total_decoding"]
    );
}

#[test]
fn bench_stage_sums_are_conserved() {
    let cfg = ringrs::bench::BenchConfig { p: 7, mu: 2, trials: 4, errors: 2, seed: 6, basis: None };
    let r = ringrs::bench::run_benchmark(&cfg).unwrap();
    for s in [r.ring, r.field] {
        let sum = s.syndrome + s.key_equation + s.chien_search + s.formal_derivative + s.forney;
        assert!((sum - s.total_decoding).abs() < 1e-6);
    }
}
