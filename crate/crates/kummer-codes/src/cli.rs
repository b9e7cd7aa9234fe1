//! Command-line front end.  Exit codes: 0 success, 2 validation error
//! (diagnostic on stderr), 3 verification failure.

use clap::{Parser, Subcommand, ValueEnum};

use crate::curve::{KummerCurve, Place};
use crate::designer::{design_from_box, hermitian_table};
use crate::oracle::{is_pure_gap, one_point_gaps};
use crate::output::{render, Envelope, FamilyBlock, Format, Meta, Payload};
use crate::puregap::{
    check_pure_finite, check_pure_with_infty, enumerate_pure_gaps, family_many_finite,
    family_many_infty, family_two_point, CheckMode, PureGapBox,
};
use crate::semigroup::{gamma_finite_finite, gamma_infty_finite};
use crate::verify::run_all;

#[derive(Parser)]
#[command(
    name = "kummer-codes",
    version,
    about = "Weierstrass gap structure and AG-code parameters for Kummer extensions y^m = f(x)"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    /// Two finite ramified places (P_1, P_2).
    Ff,
    /// The infinite place and one finite place (P_infty, P_1).
    Inf,
}

#[derive(Subcommand)]
enum Cmd {
    /// Gap numbers at a single fully ramified place
    Gaps {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        r: i64,
        /// "infty" or a finite place index 1..r
        #[arg(long, default_value = "infty")]
        place: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Minimal generating pairs of the joint semigroup at two places
    Gamma {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        r: i64,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Pure-gap checks, enumeration, and the closed-form families
    Pure {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        r: i64,
        /// Comma-separated place signature, e.g. "infty,1" or "1,2"
        #[arg(long)]
        places: String,
        /// List all pure gaps at the signature
        #[arg(long)]
        enumerate: bool,
        /// Check one comma-separated tuple
        #[arg(long)]
        check: Option<String>,
        /// Emit the closed-form families for this signature
        #[arg(long)]
        families: bool,
        /// m = u*r + 1 shape for --families (derived from m when omitted)
        #[arg(long)]
        u: Option<i64>,
        /// Cap on the entry sum for --enumerate (default 2g-1)
        #[arg(long)]
        bound: Option<i64>,
        /// Use the dimension oracle instead of the floor characterization
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// AG-code parameters from a pure-gap box, or the Hermitian table
    Design {
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        r: Option<i64>,
        /// Base field size (Hermitian mode: the q of y^{q+1} = x^q + x)
        #[arg(long)]
        q: Option<i64>,
        /// Box as "low..high" with comma-separated corners, e.g. "6,1..7,1"
        #[arg(long = "box")]
        box_spec: Option<String>,
        /// Code length
        #[arg(long)]
        n: Option<i64>,
        /// Place signature for the box (defaults to finite places 1..s)
        #[arg(long)]
        places: Option<String>,
        /// Emit the improved two-point table rows for the Hermitian curve
        #[arg(long)]
        hermitian: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-derive every closed form from the dimension oracle
    Verify {
        #[arg(long)]
        max_genus: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_place(s: &str) -> Result<Place, String> {
    if s == "infty" {
        return Ok(Place::Infinity);
    }
    s.parse::<i64>()
        .map(Place::Finite)
        .map_err(|_| format!("invalid place '{s}': expected \"infty\" or an integer index"))
}

fn parse_places(s: &str) -> Result<Vec<Place>, String> {
    s.split(',').map(|p| parse_place(p.trim())).collect()
}

fn parse_entries(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid integer '{p}'"))
        })
        .collect()
}

fn parse_box(s: &str) -> Result<(Vec<i64>, Vec<i64>), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| "invalid box: expected \"low..high\"".to_string())?;
    Ok((parse_entries(lo)?, parse_entries(hi)?))
}

fn place_names(places: &[Place]) -> Vec<String> {
    places.iter().map(|p| p.to_string()).collect()
}

fn cmd_gaps(m: i64, r: i64, place: &str, format: Format) -> Result<(String, i32), String> {
    let curve = KummerCurve::new(m, r).map_err(|e| e.to_string())?;
    let place = parse_place(place)?;
    let gaps = one_point_gaps(&curve, place).map_err(|e| e.to_string())?;
    let envelope = Envelope::new(
        "gaps",
        Meta::new(Some(m), Some(r), None),
        Payload::Gaps {
            place: place.to_string(),
            gaps,
        },
    );
    Ok((render(&envelope, format), 0))
}

fn cmd_gamma(m: i64, r: i64, flavor: FlavorArg, format: Format) -> Result<(String, i32), String> {
    let curve = KummerCurve::new(m, r).map_err(|e| e.to_string())?;
    let gamma = match flavor {
        FlavorArg::Ff => gamma_finite_finite(&curve),
        FlavorArg::Inf => gamma_infty_finite(&curve),
    };
    let envelope = Envelope::new(
        "gamma",
        Meta::new(Some(m), Some(r), None),
        Payload::Gamma {
            flavor: match flavor {
                FlavorArg::Ff => "ff".to_string(),
                FlavorArg::Inf => "inf".to_string(),
            },
            count: gamma.len(),
            pairs: gamma.pairs().to_vec(),
        },
    );
    Ok((render(&envelope, format), 0))
}

#[allow(clippy::too_many_arguments)]
fn cmd_pure(
    m: i64,
    r: i64,
    places_sig: &str,
    enumerate: bool,
    check: Option<&str>,
    families: bool,
    u: Option<i64>,
    bound: Option<i64>,
    oracle: bool,
    format: Format,
) -> Result<(String, i32), String> {
    let curve = KummerCurve::new(m, r).map_err(|e| e.to_string())?;
    let places = parse_places(places_sig)?;
    curve.validate_places(&places).map_err(|e| e.to_string())?;
    let modes = usize::from(enumerate) + usize::from(check.is_some()) + usize::from(families);
    if modes != 1 {
        return Err("exactly one of --enumerate, --check, --families is required".to_string());
    }
    let meta = Meta::new(Some(m), Some(r), None);
    let with_infty = places[0] == Place::Infinity;
    let mode_name = if oracle { "oracle" } else { "characterization" };

    if let Some(tuple) = check {
        let entries = parse_entries(tuple)?;
        if entries.len() != places.len() {
            return Err(format!(
                "expected {} entries for this signature, got {}",
                places.len(),
                entries.len()
            ));
        }
        let pure_gap = if oracle {
            is_pure_gap(&curve, &places, &entries)
        } else if with_infty {
            check_pure_with_infty(&curve, &entries)
        } else {
            check_pure_finite(&curve, &entries)
        }
        .map_err(|e| e.to_string())?;
        let envelope = Envelope::new(
            "pure-check",
            meta,
            Payload::PureCheck {
                places: place_names(&places),
                entries,
                mode: mode_name.to_string(),
                pure_gap,
            },
        );
        return Ok((render(&envelope, format), 0));
    }

    if enumerate {
        let mode = if oracle {
            CheckMode::Oracle
        } else {
            CheckMode::Characterization
        };
        let cap = 2 * curve.genus() - 1;
        let effective = bound.unwrap_or(cap).min(cap);
        let tuples =
            enumerate_pure_gaps(&curve, &places, bound, mode).map_err(|e| e.to_string())?;
        let envelope = Envelope::new(
            "pure-enumerate",
            meta,
            Payload::PureEnumerate {
                places: place_names(&places),
                bound: effective,
                mode: mode_name.to_string(),
                tuples,
            },
        );
        return Ok((render(&envelope, format), 0));
    }

    // --families
    let u = u
        .or_else(|| curve.u_parameter())
        .ok_or_else(|| format!("m={m} is not of the form u*r+1 for r={r}"))?;
    let names = place_names(&places);
    let blocks: Vec<FamilyBlock> = if places.len() == 2 && with_infty {
        let fam = family_two_point(&curve, u).map_err(|e| e.to_string())?;
        vec![
            FamilyBlock {
                label: "infty-single".to_string(),
                places: names.clone(),
                tuples: fam.infty_single.iter().map(|&(a, b)| vec![a, b]).collect(),
            },
            FamilyBlock {
                label: "infty-column".to_string(),
                places: names,
                tuples: fam.infty_column.iter().map(|&(a, b)| vec![a, b]).collect(),
            },
        ]
    } else if places.len() == 2 {
        let fam = family_two_point(&curve, u).map_err(|e| e.to_string())?;
        vec![FamilyBlock {
            label: "finite-grid".to_string(),
            places: names,
            tuples: fam.finite_grid.iter().map(|&(a, b)| vec![a, b]).collect(),
        }]
    } else if with_infty {
        let s = places.len() as i64 - 1;
        vec![FamilyBlock {
            label: "many-infty".to_string(),
            places: names,
            tuples: family_many_infty(&curve, u, s).map_err(|e| e.to_string())?,
        }]
    } else {
        let s = places.len() as i64;
        vec![FamilyBlock {
            label: "many-finite".to_string(),
            places: names,
            tuples: family_many_finite(&curve, u, s).map_err(|e| e.to_string())?,
        }]
    };
    let envelope = Envelope::new(
        "pure-families",
        meta,
        Payload::PureFamilies {
            u,
            families: blocks,
        },
    );
    Ok((render(&envelope, format), 0))
}

#[allow(clippy::too_many_arguments)]
fn cmd_design(
    m: Option<i64>,
    r: Option<i64>,
    q: Option<i64>,
    box_spec: Option<&str>,
    n: Option<i64>,
    places_sig: Option<&str>,
    hermitian: bool,
    format: Format,
) -> Result<(String, i32), String> {
    if hermitian {
        let q = q.ok_or("--hermitian requires --q")?;
        let rows = hermitian_table(q).map_err(|e| e.to_string())?;
        let envelope = Envelope::new(
            "hermitian-table",
            Meta::new(Some(q + 1), Some(q), Some(q * q)),
            Payload::HermitianTable { q, rows },
        );
        return Ok((render(&envelope, format), 0));
    }
    let m = m.ok_or("--m is required unless --hermitian is given")?;
    let r = r.ok_or("--r is required unless --hermitian is given")?;
    let curve = match q {
        Some(q) => KummerCurve::with_field(m, r, q),
        None => KummerCurve::new(m, r),
    }
    .map_err(|e| e.to_string())?;
    let spec = box_spec.ok_or("--box is required unless --hermitian is given")?;
    let n = n.ok_or("--n is required unless --hermitian is given")?;
    let (low, high) = parse_box(spec)?;
    let with_infty = match places_sig {
        Some(sig) => {
            let places = parse_places(sig)?;
            curve.validate_places(&places).map_err(|e| e.to_string())?;
            if places.len() != low.len() {
                return Err(format!(
                    "box arity {} does not match the {}-place signature",
                    low.len(),
                    places.len()
                ));
            }
            places[0] == Place::Infinity
        }
        None => false,
    };
    let pgbox = PureGapBox::new(low, high, with_infty).map_err(|e| e.to_string())?;
    let design = design_from_box(&curve, &pgbox, n).map_err(|e| e.to_string())?;
    let envelope = Envelope::new(
        "design",
        Meta::new(Some(m), Some(r), q),
        Payload::Design {
            design,
            box_low: pgbox.low().to_vec(),
            box_high: pgbox.high().to_vec(),
        },
    );
    Ok((render(&envelope, format), 0))
}

fn cmd_verify(max_genus: i64, seed: u64, format: Format) -> Result<(String, i32), String> {
    let checks = run_all(max_genus, seed);
    let passed = checks.iter().all(|c| c.passed());
    let envelope = Envelope::new(
        "verify",
        Meta::new(None, None, None),
        Payload::Verify {
            max_genus,
            seed,
            passed,
            checks,
        },
    );
    Ok((render(&envelope, format), if passed { 0 } else { 3 }))
}

/// Parse argv, run the command, print the rendered result, return the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = i32::from(e.use_stderr()) * 2; // help/version exit 0, parse errors 2
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Cmd::Gaps {
            m,
            r,
            place,
            format,
        } => cmd_gaps(*m, *r, place, *format),
        Cmd::Gamma {
            m,
            r,
            flavor,
            format,
        } => cmd_gamma(*m, *r, *flavor, *format),
        Cmd::Pure {
            m,
            r,
            places,
            enumerate,
            check,
            families,
            u,
            bound,
            oracle,
            format,
        } => cmd_pure(
            *m,
            *r,
            places,
            *enumerate,
            check.as_deref(),
            *families,
            *u,
            *bound,
            *oracle,
            *format,
        ),
        Cmd::Design {
            m,
            r,
            q,
            box_spec,
            n,
            places,
            hermitian,
            format,
        } => cmd_design(
            *m,
            *r,
            *q,
            box_spec.as_deref(),
            *n,
            places.as_deref(),
            *hermitian,
            *format,
        ),
        Cmd::Verify {
            max_genus,
            seed,
            format,
        } => cmd_verify(*max_genus, *seed, *format),
    };
    match outcome {
        Ok((rendered, code)) => {
            print!("{rendered}");
            code
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}
