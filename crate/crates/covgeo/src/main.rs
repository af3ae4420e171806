use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use covgeo::document::{read_document, InputDocument, Payload};
use covgeo::parallel::{fuzz_parallel, threads_from_env};
use covgeo::render;
use covgeo::witness::summary_value;
use covgeo::{CliError, CliResult};
use covgeo_core::covolume::{covolume, mixed_covolume, mixed_covolume_interpolated};
use covgeo_core::demailly::{demailly_report, multiplier_ideal};
use covgeo_core::ideal::multiplicity;
use covgeo_core::inequality::{
    check_af, check_brunn_minkowski, check_ell_power, check_first_minkowski,
    check_second_minkowski, FuzzConfig, InequalityName, InequalityVerdict, Witness,
};
use covgeo_core::rational::rat;
use covgeo_core::toric::{lelong_number, mixed_ma_mass, ToricPsh};
use covgeo_core::Region;

/// Exact covolume geometry: regions, mixed covolumes, Lelong numbers,
/// monomial multiplier ideals and reversed Alexandrov-Fenchel checks.
#[derive(Parser)]
#[command(name = "covgeo", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical generators, facets, cofiniteness and covolume of a region
    Region { file: PathBuf },
    /// Mixed covolume of up to n region documents (last one repeated)
    MixedCovol {
        /// polarization | interpolation | both
        #[arg(long, default_value = "polarization")]
        method: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// k-th Lelong number of a toric psh document
    Lelong {
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
    /// Mixed Monge-Ampere mass of up to n toric psh documents (last repeated)
    Mass {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Hilbert-Samuel multiplicity of an m-primary monomial ideal
    Mult { file: PathBuf },
    /// Multiplier ideal of m times a toric psh document
    Mideal {
        #[arg(long)]
        m: u32,
        file: PathBuf,
    },
    /// Lelong numbers of the multiplier-ideal approximants against the target
    Demailly {
        #[arg(long)]
        k: usize,
        /// Comma-separated increasing approximation levels, e.g. 1,2,4,8
        #[arg(long = "m-list", value_delimiter = ',', required = true)]
        m_list: Vec<u32>,
        /// Write the rows as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
        file: PathBuf,
    },
    /// Run one inequality checker on documents (regions, ideals or psh)
    Check {
        /// af | first-minkowski | second-minkowski | brunn-minkowski | ell-power
        #[arg(long)]
        name: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Randomized verification of the reversed inequality family
    Fuzz {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_generators: usize,
        #[arg(long, default_value_t = 6)]
        coordinate_bound: u64,
        /// Where to write the witness file on violation
        #[arg(long, default_value = "fuzz_witness.json")]
        witness: PathBuf,
        /// Print the summary as JSON instead of the table
        #[arg(long)]
        json: bool,
        /// Test hook: inject a fabricated violation to exercise the failure path
        #[arg(long, hide = true)]
        inject_violation: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn region_of(doc: InputDocument) -> CliResult<Region> {
    match doc.payload {
        Payload::Region(region) => Ok(region),
        Payload::Ideal(ideal) => Ok(ideal.newton_polyhedron()),
        Payload::Psh(phi) => Ok(phi.indicator_diagram()?),
    }
}

fn psh_of(doc: InputDocument, path: &Path) -> CliResult<ToricPsh> {
    match doc.payload {
        Payload::Psh(phi) => Ok(phi),
        _ => Err(CliError::Parse(format!(
            "{} must be a psh document",
            path.display()
        ))),
    }
}

/// Repeats the last entry until the list has the target arity.
fn pad_to<T: Clone>(mut items: Vec<T>, arity: usize, what: &str) -> CliResult<Vec<T>> {
    if items.is_empty() || items.len() > arity {
        return Err(CliError::Parse(format!(
            "expected between 1 and {arity} {what}, got {}",
            items.len()
        )));
    }
    while items.len() < arity {
        items.push(items.last().expect("nonempty").clone());
    }
    Ok(items)
}

fn run(command: Command) -> CliResult<u8> {
    match command {
        Command::Region { file } => {
            let doc = read_document(&file)?;
            let label = doc.label.clone();
            let region = region_of(doc)?;
            let cov = if region.is_cofinite() {
                Some(covolume(&region)?)
            } else {
                None
            };
            print!(
                "{}",
                render::region_block(label.as_deref(), &region, cov.as_ref())
            );
            Ok(0)
        }
        Command::MixedCovol { method, files } => {
            let regions: Vec<Region> = files
                .iter()
                .map(|f| read_document(f).and_then(region_of))
                .collect::<CliResult<_>>()?;
            let n = regions.first().map(Region::dim).unwrap_or(0);
            let family = pad_to(regions, n, "region documents")?;
            match method.as_str() {
                "polarization" => {
                    let report = mixed_covolume(&family)?;
                    println!("mixed covolume: {}", render::value_string(&report.value));
                }
                "interpolation" => {
                    let report = mixed_covolume_interpolated(&family)?;
                    println!("mixed covolume: {}", render::value_string(&report.value));
                }
                "both" => {
                    let pol = mixed_covolume(&family)?;
                    let interp = mixed_covolume_interpolated(&family)?;
                    println!("mixed covolume: {}", render::value_string(&pol.value));
                    println!(
                        "oracle agreement: {}",
                        if pol.value == interp.value {
                            "exact"
                        } else {
                            "MISMATCH"
                        }
                    );
                }
                other => {
                    return Err(CliError::Parse(format!(
                        "unknown --method {other:?} (use polarization, interpolation or both)"
                    )))
                }
            }
            Ok(0)
        }
        Command::Lelong { k, file } => {
            let phi = psh_of(read_document(&file)?, &file)?;
            let value = lelong_number(&phi, k)?;
            println!("lelong_{k}: {}", render::value_string(&value));
            Ok(0)
        }
        Command::Mass { files } => {
            let exprs: Vec<ToricPsh> = files
                .iter()
                .map(|f| read_document(f).and_then(|d| psh_of(d, f)))
                .collect::<CliResult<_>>()?;
            let n = exprs.first().map(ToricPsh::dim).unwrap_or(0);
            let family = pad_to(exprs, n, "psh documents")?;
            let value = mixed_ma_mass(&family)?;
            println!("mixed mass: {}", render::value_string(&value));
            Ok(0)
        }
        Command::Mult { file } => {
            let doc = read_document(&file)?;
            let Payload::Ideal(ideal) = doc.payload else {
                return Err(CliError::Parse(format!(
                    "{} must be an ideal document",
                    file.display()
                )));
            };
            let value = multiplicity(&ideal)?;
            println!("multiplicity: {}", render::value_string(&value));
            Ok(0)
        }
        Command::Mideal { m, file } => {
            let phi = psh_of(read_document(&file)?, &file)?;
            let ideal = multiplier_ideal(&phi, m)?;
            println!("generators: {}", ideal.generators().len());
            println!(
                "{}",
                serde_json::to_string(&covgeo::document::ideal_literal(&ideal))
                    .expect("ideal literals serialize")
            );
            Ok(0)
        }
        Command::Demailly {
            k,
            m_list,
            csv,
            file,
        } => {
            let phi = psh_of(read_document(&file)?, &file)?;
            let report = demailly_report(&phi, k, &m_list)?;
            print!("{}", render::demailly_table(&report));
            if let Some(path) = csv {
                std::fs::write(&path, render::demailly_csv(&report))?;
                println!("csv written: {}", path.display());
            }
            Ok(0)
        }
        Command::Check { name, files } => {
            let verdict = run_check(&name, &files)?;
            print!("{}", render::verdict_block(&verdict));
            Ok(0)
        }
        Command::Fuzz {
            n,
            count,
            seed,
            max_generators,
            coordinate_bound,
            witness,
            json,
            inject_violation,
        } => {
            let config = FuzzConfig {
                dim: n,
                count,
                seed,
                max_generators,
                coordinate_bound,
            };
            let mut summary = fuzz_parallel(&config, threads_from_env())?;
            if inject_violation {
                let delta = Region::simplex(config.dim.max(2));
                summary.counts[0].checked += 1;
                summary.counts[0].violations += 1;
                summary.violations.push(InequalityVerdict {
                    name: InequalityName::Af,
                    lhs: rat(0),
                    rhs: rat(1),
                    holds: false,
                    equality: false,
                    margin: rat(-1),
                    witness: Witness::Regions(vec![delta.clone(), delta]),
                });
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&summary_value(&summary))
                        .expect("summaries serialize")
                );
            } else {
                print!("{}", render::fuzz_table(&summary));
            }
            if summary.total_violations() > 0 {
                std::fs::write(
                    &witness,
                    serde_json::to_string_pretty(&summary_value(&summary))
                        .expect("summaries serialize"),
                )?;
                println!("witness written: {}", witness.display());
                return Ok(2);
            }
            Ok(0)
        }
    }
}

fn run_check(name: &str, files: &[PathBuf]) -> CliResult<InequalityVerdict> {
    let load_regions = |arity: Option<usize>| -> CliResult<Vec<Region>> {
        let regions: Vec<Region> = files
            .iter()
            .map(|f| read_document(f).and_then(region_of))
            .collect::<CliResult<_>>()?;
        let n = regions.first().map(Region::dim).unwrap_or(0);
        pad_to(regions, arity.unwrap_or(n), "documents")
    };
    match name {
        "af" => Ok(check_af(&load_regions(None)?)?),
        "first-minkowski" | "first_minkowski" => {
            let r = load_regions(Some(2))?;
            Ok(check_first_minkowski(&r[0], &r[1])?)
        }
        "second-minkowski" | "second_minkowski" => {
            let r = load_regions(Some(2))?;
            Ok(check_second_minkowski(&r[0], &r[1])?)
        }
        "brunn-minkowski" | "brunn_minkowski" => {
            let r = load_regions(Some(2))?;
            Ok(check_brunn_minkowski(&r[0], &r[1])?)
        }
        "ell-power" | "ell_power" => {
            if files.len() != 1 {
                return Err(CliError::Parse(
                    "ell-power takes exactly one psh document".into(),
                ));
            }
            let phi = psh_of(read_document(&files[0])?, &files[0])?;
            Ok(check_ell_power(&phi)?)
        }
        other => Err(CliError::Parse(format!(
            "unknown inequality {other:?} (af, first-minkowski, second-minkowski, brunn-minkowski, ell-power)"
        ))),
    }
}
