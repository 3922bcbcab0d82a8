//! Batch front door for the stable-pairs invariant engine: every pipeline
//! behind a subcommand, with deterministic text or JSON output.
//!
//! Exit codes: 0 success, 1 internal contract violation, 2 usage error,
//! 3 failed mathematical cross-check (with both sides printed).

mod output;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use output::*;
use quotpt::integrals::{quot_intersection, quot_theta_integral, QuotContext};
use quotpt::localization::{
    component_contribution, genus0_contribution, minimal_chi, pt_invariant, pt_invariant_seq,
    pt_series, pt_series_seq, FixedComponent, GeomData,
};
use quotpt::oracle::validate_monomial_integrals;
use quotpt::partitions::{
    dt_degree_zero, gw_pt_sides, macmahon, maximal_subbundle_count, minimal_invariant,
    pt_closed_form,
};
use quotpt::scalars::QSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "quotpt",
    version,
    about = "Exact stable-pairs residue invariants of rank-2 bundles over curves"
)]
struct Cli {
    /// Output format (also settable via QUOTPT_FORMAT)
    #[arg(
        long,
        global = true,
        value_enum,
        env = "QUOTPT_FORMAT",
        default_value = "text"
    )]
    format: Format,

    /// Fan independent component sums and sweeps across worker threads
    #[arg(long, global = true)]
    parallel: bool,

    /// Also write the JSON rendering to this file
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GeomArgs {
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
    genus: i64,
    #[arg(long, allow_negative_numbers = true)]
    degree: i64,
}

impl GeomArgs {
    fn geom(&self) -> GeomData {
        GeomData::new(self.genus, self.degree)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generating series of stable-pairs invariants through q^chi-max
    PtSeries {
        #[command(flatten)]
        geom: GeomArgs,
        #[arg(long, allow_negative_numbers = true)]
        chi_max: i64,
        /// Cross-check against the closed form; mismatch exits 3
        #[arg(long)]
        check_closed_form: bool,
    },
    /// Single stable-pairs invariant at the given Euler characteristic
    PtInvariant {
        #[command(flatten)]
        geom: GeomArgs,
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
    },
    /// Local contribution of one fixed component Quot^e E x Sym^n C
    Contribution {
        #[command(flatten)]
        geom: GeomArgs,
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        n: i64,
    },
    /// Genus-zero contribution C(d, e, n) by direct coefficient extraction
    #[command(name = "genus0-c")]
    Genus0C {
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        n: i64,
    },
    /// Even-monomial intersection number on the rank-one Quot scheme
    QuotIntegral {
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        genus: i64,
        #[arg(long, default_value = "2", value_parser = clap::value_parser!(i64).range(1..))]
        rank: i64,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long, allow_negative_numbers = true)]
        a_exp: i64,
        #[arg(long, default_value = "0")]
        even_pairs: i64,
    },
    /// Theta-power integral a^(m-1+k) theta^(g-k) = N^k g!/k!
    ThetaIntegral {
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        genus: i64,
        #[arg(long, default_value = "2", value_parser = clap::value_parser!(i64).range(1..))]
        rank: i64,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long)]
        k: i64,
    },
    /// Brute-force exterior-algebra validation of the monomial pairing
    OracleCheck {
        #[arg(long, default_value = "3", value_parser = clap::value_parser!(i64).range(0..=4))]
        gmax: i64,
        #[arg(long, default_value = "2", value_parser = clap::value_parser!(i64).range(1..))]
        rank: i64,
    },
    /// Exact GW/PT correspondence check; mismatch exits 3
    GwPtCheck {
        #[command(flatten)]
        geom: GeomArgs,
    },
    /// Minimal Euler characteristic and the invariant carried there
    Minimal {
        #[command(flatten)]
        geom: GeomArgs,
    },
    /// Count of maximal line subbundles of a generic bundle: 2^g
    MaxSubbundles {
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        genus: i64,
    },
    /// MacMahon plane-partition series through q^order
    Macmahon {
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        order: i64,
    },
    /// Degree-zero DT series M(-q)^(8g-8-d) through q^order
    Zdt0 {
        #[command(flatten)]
        geom: GeomArgs,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        order: i64,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match execute(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    };
    std::process::exit(code);
}

/// Emit one result: text or JSON to stdout per the format flag, and the
/// JSON rendering to --out when requested.
fn emit<T: Serialize>(cli: &Cli, text: &str, json: &T) -> quotpt::Result<()> {
    let rendered = serde_json::to_string(json).expect("output serialization");
    match cli.format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{rendered}"),
    }
    if let Some(path) = &cli.out {
        let mut file = std::fs::File::create(path).map_err(|e| {
            quotpt::Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))
        })?;
        writeln!(file, "{rendered}").map_err(|e| {
            quotpt::Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))
        })?;
    }
    Ok(())
}

fn series_json(gd: &GeomData, series: &QSeries) -> SeriesJson {
    SeriesJson {
        genus: gd.genus,
        degree: gd.degree,
        series: series_terms(series),
        meta: SeriesMetaJson {
            chi_min: minimal_chi(gd),
        },
    }
}

fn execute(cli: &Cli) -> quotpt::Result<i32> {
    let par = cli.parallel;
    match &cli.command {
        Command::PtSeries {
            geom,
            chi_max,
            check_closed_form,
        } => {
            let gd = geom.geom();
            let series = if par {
                pt_series(&gd, *chi_max)?
            } else {
                pt_series_seq(&gd, *chi_max)?
            };
            if *check_closed_form {
                let closed = pt_closed_form(&gd).expand(*chi_max);
                if !series.agrees_with(&closed) {
                    println!(
                        "closed-form cross-check FAILED for genus {} degree {}",
                        gd.genus, gd.degree
                    );
                    println!("localization: {series}");
                    println!("closed form:  {closed}");
                    return Ok(3);
                }
            }
            emit(cli, &series.to_string(), &series_json(&gd, &series))?;
            Ok(0)
        }
        Command::PtInvariant { geom, chi } => {
            let gd = geom.geom();
            let value = if par {
                pt_invariant(&gd, *chi)
            } else {
                pt_invariant_seq(&gd, *chi)
            };
            let json = InvariantJson {
                genus: gd.genus,
                degree: gd.degree,
                chi: *chi,
                value: ScalarJson::of(&value),
            };
            emit(cli, &value.to_string(), &json)?;
            Ok(0)
        }
        Command::Contribution { geom, e, n } => {
            let gd = geom.geom();
            let comp = FixedComponent::new(&gd, *e, *n)?;
            let value = component_contribution(&gd, &comp)?;
            let json = ContributionJson {
                genus: gd.genus,
                degree: gd.degree,
                e: *e,
                n: *n,
                value: ScalarJson::of(&value),
            };
            emit(cli, &value.to_string(), &json)?;
            Ok(0)
        }
        Command::Genus0C { degree, e, n } => {
            let value = genus0_contribution(*degree, *e, *n)?;
            let json = ContributionJson {
                genus: 0,
                degree: *degree,
                e: *e,
                n: *n,
                value: ScalarJson::of(&value),
            };
            emit(cli, &value.to_string(), &json)?;
            Ok(0)
        }
        Command::QuotIntegral {
            genus,
            rank,
            degree,
            e,
            a_exp,
            even_pairs,
        } => {
            let ctx = QuotContext::new(*genus, *rank, *degree, *e, 0);
            if !(0..=*genus).contains(even_pairs) {
                return Err(quotpt::Error::InvalidArgument(
                    "even-pairs must lie in 0..=genus".into(),
                ));
            }
            let value = quot_intersection(&ctx, *a_exp, *even_pairs);
            emit(cli, &value.to_string(), &ScalarJson::of(&value))?;
            Ok(0)
        }
        Command::ThetaIntegral {
            genus,
            rank,
            degree,
            e,
            k,
        } => {
            let ctx = QuotContext::new(*genus, *rank, *degree, *e, 0);
            if !(0..=*genus).contains(k) {
                return Err(quotpt::Error::InvalidArgument(
                    "k must lie in 0..=genus".into(),
                ));
            }
            let value = quot_theta_integral(&ctx, *k);
            emit(cli, &value.to_string(), &ScalarJson::of(&value))?;
            Ok(0)
        }
        Command::OracleCheck { gmax, rank } => {
            let rows = validate_monomial_integrals(*gmax, *rank, par);
            let all_match = rows.iter().all(|r| r.matches());
            let mut text = String::new();
            for r in &rows {
                text.push_str(&format!(
                    "g={} j={} k={} l={}: oracle={} closed={} {}\n",
                    r.genus,
                    r.theta1_pow,
                    r.theta2_pow,
                    r.cross_pairs,
                    r.oracle,
                    r.closed_form,
                    if r.matches() { "ok" } else { "MISMATCH" }
                ));
            }
            text.push_str(&format!(
                "{} cases, {}",
                rows.len(),
                if all_match {
                    "all match"
                } else {
                    "MISMATCHES FOUND"
                }
            ));
            let json = OracleReportJson {
                gmax: *gmax,
                rank: *rank,
                all_match,
                rows: rows
                    .iter()
                    .map(|r| OracleRowJson {
                        genus: r.genus,
                        j: r.theta1_pow,
                        k: r.theta2_pow,
                        l: r.cross_pairs,
                        oracle: r.oracle.to_string(),
                        closed_form: r.closed_form.to_string(),
                        matches: r.matches(),
                    })
                    .collect(),
            };
            emit(cli, &text, &json)?;
            Ok(if all_match { 0 } else { 3 })
        }
        Command::GwPtCheck { geom } => {
            let gd = geom.geom();
            let (gw, pt) = gw_pt_sides(&gd);
            let matches = gw == pt;
            let json = GwPtJson {
                genus: gd.genus,
                degree: gd.degree,
                matches,
                gw_side: gw.to_string(),
                pt_side: pt.to_string(),
            };
            let text = if matches {
                format!("match: genus {} degree {}", gd.genus, gd.degree)
            } else {
                format!(
                    "MISMATCH: genus {} degree {}\ngw side: {gw}\npt side: {pt}",
                    gd.genus, gd.degree
                )
            };
            emit(cli, &text, &json)?;
            Ok(if matches { 0 } else { 3 })
        }
        Command::Minimal { geom } => {
            let gd = geom.geom();
            let (chi_min, value) = minimal_invariant(&gd);
            let json = MinimalJson {
                genus: gd.genus,
                degree: gd.degree,
                chi_min,
                value: ScalarJson::of(&value),
            };
            emit(cli, &format!("chi_min = {chi_min}\nvalue = {value}"), &json)?;
            Ok(0)
        }
        Command::MaxSubbundles { genus } => {
            let count = maximal_subbundle_count(*genus);
            let json = CountJson {
                genus: *genus,
                count: count.to_string(),
            };
            emit(cli, &count.to_string(), &json)?;
            Ok(0)
        }
        Command::Macmahon { order } => {
            let series = macmahon(*order);
            let json = MacmahonJson {
                order: *order,
                series: series_terms(&series),
            };
            emit(cli, &series.to_string(), &json)?;
            Ok(0)
        }
        Command::Zdt0 { geom, order } => {
            let gd = geom.geom();
            let series = dt_degree_zero(&gd, *order);
            let json = DtZeroJson {
                genus: gd.genus,
                degree: gd.degree,
                order: *order,
                exponent: 8 * gd.genus - 8 - gd.degree,
                series: series_terms(&series),
            };
            emit(cli, &series.to_string(), &json)?;
            Ok(0)
        }
    }
}
