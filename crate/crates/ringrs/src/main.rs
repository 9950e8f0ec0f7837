use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use ringrs::basis_file;
use ringrs::bench::{run_benchmark, BenchConfig};
use ringrs::filecodec::{FileCodec, DEFAULT_CODEWORDS_PER_FRAME};
use ringrs::frame::FrameHeader;
use ringrs::selftest::run_selftest;
use ringrs_core::params::length_info;
use ringrs_core::RingElement;

#[derive(Parser)]
#[command(name = "ringrs", version, about = "Reed-Solomon codes over F2[x]/(1+x+...+x^(p-1))")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Factorization of 1+x+...+x^(p-1) and the resulting code length.
    Params {
        #[arg(long)]
        p: u32,
    },
    /// Encode a file (stdin with `-`) into frames.
    Encode {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        mu: u32,
        #[arg(long)]
        basis_file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CODEWORDS_PER_FRAME)]
        codewords_per_frame: usize,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
    },
    /// Decode frames, repairing corrupted symbols. p and mu default to the
    /// values in the first frame header.
    Decode {
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        mu: Option<u32>,
        #[arg(long)]
        basis_file: Option<PathBuf>,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
    },
    /// Average XOR counts per stage, ring code against the field baseline.
    Bench {
        #[arg(long, default_value_t = 23)]
        p: u32,
        #[arg(long, default_value_t = 6)]
        mu: u32,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 32)]
        errors: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        basis_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the built-in invariant suites.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn read_input(path: &Path) -> anyhow::Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        fs::read(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn write_output(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    if path == Path::new("-") {
        io::stdout().write_all(bytes)?;
        Ok(())
    } else {
        fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
    }
}

fn load_basis(path: Option<&Path>, p: u32) -> anyhow::Result<Option<Vec<RingElement>>> {
    match path {
        None => Ok(None),
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Ok(Some(basis_file::parse(&text, p)?))
        }
    }
}

fn cmd_params(p: u32) -> anyhow::Result<ExitCode> {
    let info = length_info(p)?;
    let min = info.degrees.iter().copied().min().unwrap_or(0);
    println!("p                 {}", info.p);
    println!("factors t         {}", info.t);
    println!("factor degrees    {:?}", info.degrees);
    println!("gcd of degrees    {}", info.gcd_degree);
    println!("length (gcd)      2^{} = {}", info.gcd_degree, 1u64 << info.gcd_degree);
    println!("length (min deg)  2^{} = {}", min, 1u64 << min);
    println!("codec supported   {}", info.codec_supported);
    Ok(ExitCode::SUCCESS)
}

fn cmd_decode(
    p: Option<u32>,
    mu: Option<u32>,
    basis: Option<&Path>,
    input: &Path,
    output: &Path,
) -> anyhow::Result<ExitCode> {
    let bytes = read_input(input)?;
    let first = FrameHeader::from_bytes(&bytes).context("reading the first frame header")?;
    let p = p.unwrap_or(first.p);
    let mu = mu.unwrap_or(first.mu);
    let codec = FileCodec::new(p, mu, load_basis(basis, p)?)?;
    let report = codec.decode_stream(&bytes)?;
    if !report.failed_codewords.is_empty() {
        eprintln!(
            "uncorrectable codewords ({} of {}): {:?}",
            report.failed_codewords.len(),
            report.codewords,
            report.failed_codewords
        );
        return Ok(ExitCode::from(2));
    }
    write_output(output, &report.bytes)?;
    eprintln!(
        "decoded {} frames, {} codewords, {} repaired",
        report.frames,
        report.codewords,
        report.repaired_codewords.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let pool = ringrs::thread_pool()?;
    match cli.cmd {
        Cmd::Params { p } => cmd_params(p),
        Cmd::Encode { p, mu, basis_file, codewords_per_frame, input, output } => {
            if codewords_per_frame == 0 {
                bail!("--codewords-per-frame must be at least 1");
            }
            let codec = FileCodec::new(p, mu, load_basis(basis_file.as_deref(), p)?)?;
            let data = read_input(&input)?;
            let out = pool.install(|| codec.encode_stream(&data, codewords_per_frame))?;
            write_output(&output, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Decode { p, mu, basis_file, input, output } => {
            pool.install(|| cmd_decode(p, mu, basis_file.as_deref(), &input, &output))
        }
        Cmd::Bench { p, mu, trials, errors, seed, basis_file, format } => {
            let cfg = BenchConfig { p, mu, trials, errors, seed, basis: load_basis(basis_file.as_deref(), p)? };
            let start = Instant::now();
            let report = pool.install(|| run_benchmark(&cfg))?;
            eprintln!("wall time {:.3} s", start.elapsed().as_secs_f64());
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Csv => print!("{}", report.to_csv()?),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Selftest { seed } => {
            let results = pool.install(|| run_selftest(seed));
            let mut ok = true;
            for r in &results {
                println!(
                    "{} {} ({} cases, {} failures)",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.name,
                    r.cases,
                    r.failures
                );
                ok &= r.passed();
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::FAILURE
        }
    }
}
