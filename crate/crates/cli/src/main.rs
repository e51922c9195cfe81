//! Command-line surface for the quotient computations: exact (co)homology,
//! 𝔽₂ ring operations, quadratic-functor orbit counts, the bordism
//! spectral sequence, geometric action verification, double-point counts,
//! and the reference-value suite.

mod catalog;
mod paper_suite;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use report::{Provenance, Report};
use s2s2_core::ahss::{bordism_answer, e2_page, e3_page, BordismInput, Coefficient};
use s2s2_core::exact::{smith_normal_form, IntMatrix};
use s2s2_core::f2ring::ring_isomorphic;
use s2s2_core::gamma::{gamma_functor, swap_symmetry};
use s2s2_core::homalg::{group_cohomology, group_homology};
use s2s2_core::kkr::{distinguish_quotients, q_kkr, ImmersedSphere, PiClass, Quotient};
use s2s2_core::quat::{covering_check, verify_action, ActionKind};
use std::io::Read;
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "s2s2",
    version,
    about = "Invariants of the free quotients of S^2 x S^2: exact group \
             (co)homology, F2 cohomology rings with Steenrod squares and Wu \
             classes, quadratic-functor orbit counts, the bordism spectral \
             sequence, and numerically certified geometry"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the sampled geometry verifications.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Grid resolution for double-point searches.
    #[arg(long, global = true, default_value_t = 200)]
    grid: usize,
    /// Sample count for the geometry verifications.
    #[arg(long, global = true, default_value_t = 10_000)]
    samples: usize,
    /// Override tolerance echoed into reports (informational).
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form of an integer matrix (rows of integers on stdin
    /// or in a file).
    Snf {
        /// Input file; stdin when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Group cohomology H^n(group; module).
    GroupCohomology {
        #[arg(long)]
        group: String,
        /// Module name: pi2, pi3 (z4 only), z, zw.
        #[arg(long)]
        module: String,
        #[arg(long, conflicts_with = "max_degree")]
        degree: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Group homology H_n(group; module).
    GroupHomology {
        #[arg(long)]
        group: String,
        #[arg(long)]
        module: String,
        #[arg(long, conflicts_with = "max_degree")]
        degree: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Graded F2-algebra operations on a presentation.
    Ring {
        #[command(subcommand)]
        op: RingOp,
    },
    /// Whitehead quadratic functor: induced actions, twisted coinvariants,
    /// polarisation orbits.
    Gamma {
        #[command(subcommand)]
        op: GammaOp,
    },
    /// The bordism spectral sequence for the cyclic-4 normal 1-type.
    Bordism {
        #[command(subcommand)]
        op: BordismOp,
    },
    /// Verify orders, commutativity and freeness of the registered
    /// actions.
    VerifyActions {
        /// sigma, sigma2, psi, klein, identity, or all.
        #[arg(long, default_value = "all")]
        action: String,
    },
    /// Verify the quaternionic covering identities.
    CoverCheck,
    /// Double points and the quadratic function on a catalogued
    /// representative.
    Kkr {
        /// s2xrp2, s2xtrp2, or rp4srp4.
        #[arg(long, required_unless_present = "table")]
        quotient: Option<String>,
        /// x, y, x+y, or 0.
        #[arg(long, required_unless_present = "table")]
        class: Option<String>,
        /// Push-off parameter for the isotoped diagonal.
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        /// Emit the full v2/q distinction table instead.
        #[arg(long)]
        table: bool,
    },
    /// Run every tabulated reference value and report mismatches.
    PaperSuite,
}

#[derive(Subcommand)]
enum RingOp {
    /// Build a ring and print its dimensions and bases.
    Build {
        #[arg(long)]
        file: String,
    },
    /// Cup product of two classes.
    Cup {
        #[arg(long)]
        file: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Steenrod square Sq^i of a class.
    Sq {
        #[arg(long)]
        file: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        class: String,
    },
    /// Wu classes v1, v2 of a 4-dimensional ring.
    Wu {
        #[arg(long)]
        file: String,
    },
    /// Exhaustive isomorphism test between two rings.
    Iso {
        #[arg(long)]
        file: String,
        #[arg(long)]
        file2: String,
        /// Truncate both rings to this degree first.
        #[arg(long)]
        truncate: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GammaOp {
    /// Induced action matrices on the quadratic functor.
    Action {
        #[arg(long)]
        case: String,
    },
    /// Twisted coinvariants.
    Coinvariants {
        #[arg(long)]
        case: String,
    },
    /// Orbit count of the torsion subgroup.
    Orbits {
        #[arg(long)]
        case: String,
        /// Include the factor-interchange symmetry.
        #[arg(long)]
        swap: bool,
    },
}

/// Flags shared by the bordism subcommands: either a named default
/// (`--group z4|trivial`) or an explicit ring presentation with the
/// characteristic classes given as polynomials. When a ring is supplied,
/// its degree-1 generators must be listed in the order of the group
/// generators they are dual to.
#[derive(clap::Args)]
struct BordismSource {
    #[arg(long, default_value = "z4")]
    group: String,
    /// Ring presentation (catalogue name or file path) overriding the
    /// built-in one.
    #[arg(long)]
    ring: Option<String>,
    /// w1 as a polynomial in the ring (requires --ring).
    #[arg(long, requires = "ring")]
    w1: Option<String>,
    /// w2 as a polynomial in the ring (requires --ring).
    #[arg(long, requires = "ring")]
    w2: Option<String>,
}

#[derive(Subcommand)]
enum BordismOp {
    /// The E2 page.
    E2 {
        #[command(flatten)]
        source: BordismSource,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// The E3 page on total degrees 4 and 5.
    E3 {
        #[command(flatten)]
        source: BordismSource,
    },
    /// The assembled degree-4 answer.
    Answer {
        #[command(flatten)]
        source: BordismSource,
        /// Zero out the q = 4 coefficient row.
        #[arg(long)]
        omega4_zero: bool,
        /// Drop the documented survival assumption for the (4,0) term.
        #[arg(long)]
        no_e8: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    if cli.grid < 2 || cli.grid > 5000 {
        eprintln!("error: --grid must be between 2 and 5000");
        std::process::exit(2);
    }
    if cli.samples == 0 {
        eprintln!("error: --samples must be positive");
        std::process::exit(2);
    }
    let outcome = run(&cli);
    match outcome {
        Ok((report, exit_code)) => {
            let rendered = report.render(cli.format == Format::Json);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    std::process::exit(2);
                }
            } else {
                print!("{rendered}");
            }
            std::process::exit(exit_code);
        }
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn run(cli: &Cli) -> Result<(Report, i32), String> {
    match &cli.command {
        Command::Snf { input } => cmd_snf(cli, input.as_deref()),
        Command::GroupCohomology {
            group,
            module,
            degree,
            max_degree,
        } => cmd_group_homalg(cli, group, module, *degree, *max_degree, true),
        Command::GroupHomology {
            group,
            module,
            degree,
            max_degree,
        } => cmd_group_homalg(cli, group, module, *degree, *max_degree, false),
        Command::Ring { op } => cmd_ring(cli, op),
        Command::Gamma { op } => cmd_gamma(cli, op),
        Command::Bordism { op } => cmd_bordism(cli, op),
        Command::VerifyActions { action } => cmd_verify_actions(cli, action),
        Command::CoverCheck => cmd_cover_check(cli),
        Command::Kkr {
            quotient,
            class,
            eps,
            table,
        } => cmd_kkr(cli, quotient.as_deref(), class.as_deref(), *eps, *table),
        Command::PaperSuite => cmd_paper_suite(cli),
    }
}

fn base_report(cli: &Cli, command: &str, section: Option<&str>) -> Report {
    let mut report = Report::new(command, section, cli.seed, cli.grid);
    report.tolerance = cli.tolerance;
    report
}

fn cmd_snf(cli: &Cli, input: Option<&std::path::Path>) -> Result<(Report, i32), String> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            buf
        }
    };
    let rows: Vec<Vec<i64>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| {
            line.split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|_| format!("bad integer '{tok}'"))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if rows.is_empty() {
        return Err("empty matrix".to_string());
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err("ragged matrix rows".to_string());
    }
    let m = IntMatrix::from_rows(&rows);
    let snf = smith_normal_form(&m);

    let mut report = base_report(cli, "snf", None);
    report.input("rows", m.rows());
    report.input("cols", m.cols());
    let diagonal: Vec<String> = (0..m.rows().min(m.cols()))
        .map(|i| snf.d[(i, i)].to_string())
        .collect();
    report.claim("diagonal", diagonal.join(", "), Provenance::Computed);
    report.claim("rank", snf.rank(), Provenance::Computed);
    report.set_payload(&snf);
    Ok((report, 0))
}

fn cmd_group_homalg(
    cli: &Cli,
    group_name: &str,
    module_name: &str,
    degree: Option<usize>,
    max_degree: usize,
    cohomology: bool,
) -> Result<(Report, i32), String> {
    let group = catalog::group_by_name(group_name)
        .ok_or_else(|| format!("unknown group '{group_name}'"))?;
    let (command, section, letter) = if cohomology {
        ("group-cohomology", "6", "H^")
    } else {
        ("group-homology", "13", "H_")
    };
    let mut report = base_report(cli, command, Some(section));
    report.input("group", group_name);
    report.input("module", module_name);
    let degrees: Vec<usize> = match degree {
        Some(n) => vec![n],
        None => (0..=max_degree).collect(),
    };
    if module_name == "f2" {
        // Trivial Z/2 coefficients: dimensions over F2.
        for n in degrees {
            let dim = if cohomology {
                s2s2_core::homalg::f2_cohomology_dim(&group, n)
            } else {
                s2s2_core::homalg::f2_homology_dim(&group, n)
            };
            let rendered = match dim {
                0 => "0".to_string(),
                d => vec!["Z/2"; d].join(" + "),
            };
            report.claim(&format!("{letter}{n}"), rendered, Provenance::Computed);
        }
        return Ok((report, 0));
    }
    let module = catalog::module_by_name(&group, module_name)
        .ok_or_else(|| format!("unknown module '{module_name}' for group '{group_name}'"))?;
    for n in degrees {
        let h = if cohomology {
            group_cohomology(&group, &module, n)
        } else {
            group_homology(&group, &module, n)
        };
        report.claim(&format!("{letter}{n}"), h.to_string(), Provenance::Computed);
    }
    Ok((report, 0))
}

fn cmd_ring(cli: &Cli, op: &RingOp) -> Result<(Report, i32), String> {
    let mut report = base_report(cli, "ring", Some("8-11"));
    match op {
        RingOp::Build { file } => {
            let ring = catalog::ring_by_name_or_path(file)?;
            report.input("file", file.as_str());
            report.claim("dims", format!("{:?}", ring.dims()), Provenance::Computed);
            for d in 0..=ring.top_degree() {
                report.claim(
                    &format!("basis[{d}]"),
                    ring.basis_names(d).join(", "),
                    Provenance::Computed,
                );
            }
        }
        RingOp::Cup { file, a, b } => {
            let ring = catalog::ring_by_name_or_path(file)?;
            report.input("file", file.as_str());
            report.input("a", a.as_str());
            report.input("b", b.as_str());
            let ca = ring.class(a).map_err(|e| e.to_string())?;
            let cb = ring.class(b).map_err(|e| e.to_string())?;
            let prod = ring.cup(&ca, &cb).map_err(|e| e.to_string())?;
            report.claim("product", ring.render_class(&prod), Provenance::Computed);
        }
        RingOp::Sq { file, i, class } => {
            let ring = catalog::ring_by_name_or_path(file)?;
            report.input("file", file.as_str());
            report.input("i", *i);
            report.input("class", class.as_str());
            let c = ring.class(class).map_err(|e| e.to_string())?;
            let sq = ring.sq(*i, &c);
            report.claim(
                &format!("Sq^{i}"),
                ring.render_class(&sq),
                Provenance::Computed,
            );
        }
        RingOp::Wu { file } => {
            let ring = catalog::ring_by_name_or_path(file)?;
            report.input("file", file.as_str());
            let (v1, v2) = ring.wu_classes().map_err(|e| e.to_string())?;
            report.claim("v1", ring.render_class(&v1), Provenance::Computed);
            report.claim("v2", ring.render_class(&v2), Provenance::Computed);
        }
        RingOp::Iso {
            file,
            file2,
            truncate,
        } => {
            let mut r1 = catalog::ring_by_name_or_path(file)?;
            let mut r2 = catalog::ring_by_name_or_path(file2)?;
            if let Some(top) = truncate {
                r1 = r1.truncate(*top).map_err(|e| e.to_string())?;
                r2 = r2.truncate(*top).map_err(|e| e.to_string())?;
            }
            report.input("file", file.as_str());
            report.input("file2", file2.as_str());
            if let Some(top) = truncate {
                report.input("truncate", *top);
            }
            let (iso, witness) = ring_isomorphic(&r1, &r2);
            report.claim("isomorphic", iso, Provenance::Computed);
            if let Some(w) = witness {
                report.set_payload(&w);
            }
        }
    }
    Ok((report, 0))
}

fn cmd_gamma(cli: &Cli, op: &GammaOp) -> Result<(Report, i32), String> {
    let mut report = base_report(cli, "gamma", Some("2,9,10"));
    let case_name = match op {
        GammaOp::Action { case }
        | GammaOp::Coinvariants { case }
        | GammaOp::Orbits { case, .. } => case.clone(),
    };
    let (_group, module, allowed) =
        catalog::gamma_case(&case_name).ok_or_else(|| format!("unknown case '{case_name}'"))?;
    report.input("case", case_name.as_str());
    let gm = gamma_functor(&module);
    match op {
        GammaOp::Action { .. } => {
            report.claim("rank", gm.rank(), Provenance::Computed);
            report.claim("labels", gm.labels().join(", "), Provenance::Computed);
            let matrices: Vec<String> = gm.actions().iter().map(|a| format!("{a:?}")).collect();
            report.claim("generators", gm.actions().len(), Provenance::Computed);
            report.set_payload(&matrices);
        }
        GammaOp::Coinvariants { .. } => {
            let inv = gm.twisted_coinvariants();
            report.claim("coinvariants", inv.to_string(), Provenance::Computed);
        }
        GammaOp::Orbits { swap, .. } => {
            if *swap && !allowed.contains(&"swap") {
                return Err(format!(
                    "the factor-interchange symmetry is not available for case '{case_name}'"
                ));
            }
            let symmetries = if *swap { vec![swap_symmetry()] } else { vec![] };
            let out = gm
                .torsion_orbit_count(&symmetries)
                .map_err(|e| e.to_string())?;
            report.input("swap", *swap);
            report.claim("torsion", out.torsion.to_string(), Provenance::Computed);
            report.claim("orbit-count", out.orbit_count, Provenance::Computed);
            report.claim(
                "representatives",
                out.orbit_representatives.join("; "),
                Provenance::Computed,
            );
            report.set_payload(&out);
        }
    }
    Ok((report, 0))
}

fn bordism_input(source: &BordismSource) -> Result<BordismInput, String> {
    let mut input = match source.group.as_str() {
        "z4" | "Z4" => BordismInput::cyclic4(),
        "trivial" | "1" => BordismInput::trivial(),
        other => return Err(format!("unknown bordism group '{other}'")),
    };
    let Some(ring_spec) = &source.ring else {
        return Ok(input);
    };

    let ring = catalog::ring_by_name_or_path(ring_spec)?;
    let w1 = ring
        .class(source.w1.as_deref().unwrap_or("0"))
        .map_err(|e| e.to_string())?;
    let w2 = ring
        .class(source.w2.as_deref().unwrap_or("0"))
        .map_err(|e| e.to_string())?;
    if !w1.is_zero() && w1.degree != 1 {
        return Err("w1 must have degree 1".to_string());
    }
    if !w2.is_zero() && w2.degree != 2 {
        return Err("w2 must have degree 2".to_string());
    }

    // The character classified by w1: its coefficients on the degree-1
    // generator duals, taken in group-generator order.
    let gens = input.group.num_generators();
    let degree_one: Vec<usize> = ring
        .gen_degrees()
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d == 1)
        .map(|(i, _)| i)
        .collect();
    if degree_one.len() != gens {
        return Err(format!(
            "the ring has {} degree-1 generators but the group has {} generators; \
             cannot read off the w1 character",
            degree_one.len(),
            gens
        ));
    }
    let basis = ring.basis(1);
    let mut signs = vec![1i8; gens];
    for (slot, &gen_idx) in degree_one.iter().enumerate() {
        let mut mono = s2s2_core::f2ring::Monomial::one(ring.gen_names().len());
        mono.exps[gen_idx] = 1;
        let pos = basis
            .iter()
            .position(|m| *m == mono)
            .ok_or_else(|| "degree-1 generator not a basis monomial".to_string())?;
        let coeff = if w1.is_zero() { 0 } else { w1.coords[pos] };
        signs[slot] = if coeff == 1 { -1 } else { 1 };
    }

    let w1 = if w1.is_zero() { ring.zero_class(1) } else { w1 };
    let w2 = if w2.is_zero() { ring.zero_class(2) } else { w2 };
    input.ring = ring;
    input.w1 = w1;
    input.w2 = w2;
    input.w1_signs = signs;
    Ok(input)
}

fn cmd_bordism(cli: &Cli, op: &BordismOp) -> Result<(Report, i32), String> {
    let mut report = base_report(cli, "bordism", Some("13"));
    match op {
        BordismOp::E2 { source, max_degree } => {
            report.input("group", source.group.as_str());
            report.input("max-degree", *max_degree);
            if let Some(ring) = &source.ring {
                report.input("ring", ring.as_str());
            }
            let input = bordism_input(source)?;
            if *max_degree > 6 {
                return Err("max degree is capped at 6 by the coefficient data".to_string());
            }
            let page = e2_page(&input, *max_degree);
            for entry in &page.entries {
                let value = match &entry.value {
                    s2s2_core::ahss::EntryValue::Invariants(inv) => inv.to_string(),
                    s2s2_core::ahss::EntryValue::Dim(d) => format!("F2-dim {d}"),
                    s2s2_core::ahss::EntryValue::NotComputed => "not computed".to_string(),
                };
                report.claim(
                    &format!("E2[{},{}]", entry.p, entry.q),
                    value,
                    Provenance::Computed,
                );
            }
            report.set_payload(&page);
        }
        BordismOp::E3 { source } => {
            report.input("group", source.group.as_str());
            if let Some(ring) = &source.ring {
                report.input("ring", ring.as_str());
            }
            let input = bordism_input(source)?;
            let page = e3_page(&input);
            for entry in &page.entries {
                let value = match &entry.value {
                    s2s2_core::ahss::EntryValue::Invariants(inv) => inv.to_string(),
                    s2s2_core::ahss::EntryValue::Dim(d) => format!("F2-dim {d}"),
                    s2s2_core::ahss::EntryValue::NotComputed => "not computed".to_string(),
                };
                report.claim(
                    &format!("E3[{},{}]", entry.p, entry.q),
                    value,
                    Provenance::Computed,
                );
            }
            report.set_payload(&page);
        }
        BordismOp::Answer {
            source,
            omega4_zero,
            no_e8,
        } => {
            report.input("group", source.group.as_str());
            report.input("omega4-zero", *omega4_zero);
            report.input("e8-survival", !*no_e8);
            if let Some(ring) = &source.ring {
                report.input("ring", ring.as_str());
            }
            let mut input = bordism_input(source)?;
            if *omega4_zero {
                input.coefficient_row[4] = Coefficient::Zero;
            }
            let answer = bordism_answer(&input, !*no_e8);
            report.claim("total", answer.total.to_string(), Provenance::Computed);
            for summand in &answer.summands {
                let provenance = if summand.assumption.is_some() {
                    Provenance::Assumption
                } else {
                    Provenance::Computed
                };
                report.claim(
                    &format!("summand({},{})", summand.p, summand.q),
                    summand.invariants.to_string(),
                    provenance,
                );
            }
            report.claim(
                "d3-audit",
                format!(
                    "source (3,2) dim {}, target (0,4) dim {}",
                    answer.d3_audit.source_dim, answer.d3_audit.target_dim
                ),
                Provenance::Computed,
            );
            report.set_payload(&answer);
        }
    }
    Ok((report, 0))
}

fn cmd_verify_actions(cli: &Cli, action: &str) -> Result<(Report, i32), String> {
    let mut report = base_report(cli, "verify-actions", Some("4,6,8"));
    report.samples = Some(cli.samples);
    report.input("action", action);
    let kinds: Vec<ActionKind> = if action == "all" {
        vec![
            ActionKind::OrderFour,
            ActionKind::DoubleAntipode,
            ActionKind::GlueInvolution,
            ActionKind::KleinFour,
        ]
    } else {
        vec![ActionKind::from_cli_name(action)
            .ok_or_else(|| format!("unknown action '{action}'"))?]
    };
    let mut payloads = Vec::new();
    for kind in kinds {
        match verify_action(kind, cli.samples, cli.seed) {
            Ok(r) => {
                report.claim(
                    &r.action.clone(),
                    format!(
                        "order {} ok, displacement bound {:.6}",
                        r.order, r.refined_min_displacement
                    ),
                    Provenance::Computed,
                );
                payloads.push(r);
            }
            Err(e) => {
                report.claim(
                    kind.cli_name(),
                    format!("FAILED: {e}"),
                    Provenance::Computed,
                );
            }
        }
    }
    let twist_dev = s2s2_core::quat::twist_factor_grid_deviation(100);
    report.claim(
        "twist-grid-max-deviation",
        format!("{twist_dev:e}"),
        Provenance::Computed,
    );
    let seam = s2s2_core::quat::glue_seam_mismatch(2000, cli.seed);
    report.claim(
        "glue-seam-max-mismatch",
        format!("{seam:e}"),
        Provenance::Computed,
    );
    let commute = s2s2_core::quat::boundary_commute_mismatch(2000, cli.seed);
    report.claim(
        "boundary-involution-commute",
        format!("{commute:e}"),
        Provenance::Computed,
    );
    report.set_payload(&payloads);
    Ok((report, 0))
}

fn cmd_cover_check(cli: &Cli) -> Result<(Report, i32), String> {
    let mut report = base_report(cli, "cover-check", Some("7"));
    report.samples = Some(cli.samples);
    let out = covering_check(cli.samples, cli.seed).map_err(|e| e.to_string())?;
    report.claim(
        "orthogonality-max",
        format!("{:e}", out.orthogonality_max),
        Provenance::Computed,
    );
    report.claim(
        "even-max-err",
        format!("{:e}", out.even_max_err),
        Provenance::Computed,
    );
    report.claim(
        "lift-max-err",
        format!("{:e}", out.lift_max_err),
        Provenance::Computed,
    );
    report.claim("lift-order", out.lift_order, Provenance::Computed);
    report.claim("injectivity-ok", out.injectivity_ok, Provenance::Computed);
    report.set_payload(&out);
    Ok((report, 0))
}

fn cmd_kkr(
    cli: &Cli,
    quotient: Option<&str>,
    class: Option<&str>,
    eps: f64,
    table: bool,
) -> Result<(Report, i32), String> {
    let mut report = base_report(cli, "kkr", Some("5"));
    if table {
        let out = distinguish_quotients(cli.grid).map_err(|e| e.to_string())?;
        for row in &out.rows {
            let provenance = if row.v2_provenance == "computed" {
                Provenance::Computed
            } else {
                Provenance::PaperExpected
            };
            report.claim(
                &format!("v2[{}]", row.quotient.cli_name()),
                if row.v2_nonzero { "nonzero" } else { "zero" },
                provenance,
            );
            let qs: Vec<String> = row
                .q_values
                .iter()
                .map(|q| q.map_or("-".to_string(), |v| v.to_string()))
                .collect();
            report.claim(
                &format!("q[{}](x,y,x+y)", row.quotient.cli_name()),
                qs.join(", "),
                Provenance::Computed,
            );
        }
        report.claim(
            "pairwise-distinct",
            out.pairwise_distinct,
            Provenance::Computed,
        );
        report.set_payload(&out);
        return Ok((report, 0));
    }

    let quotient_name = quotient.expect("clap enforces presence");
    let class_name = class.expect("clap enforces presence");
    let quotient = Quotient::from_cli_name(quotient_name)
        .ok_or_else(|| format!("unknown quotient '{quotient_name}'"))?;
    let class = PiClass::from_cli_name(class_name)
        .ok_or_else(|| format!("unknown class '{class_name}'"))?;
    report.input("quotient", quotient_name);
    report.input("class", class_name);
    report.input("eps", eps);
    let sphere = ImmersedSphere::catalog(quotient, class, eps)
        .ok_or_else(|| "no catalogued representative for this combination".to_string())?;
    let out = q_kkr(&sphere, cli.grid).map_err(|e| e.to_string())?;
    report.claim("q", out.value, Provenance::Computed);
    report.claim("euler-number", out.euler_number, Provenance::PaperExpected);
    report.claim(
        "double-points",
        out.double_points.count,
        Provenance::Computed,
    );
    for (i, w) in out.double_points.witnesses.iter().enumerate() {
        report.claim(
            &format!("witness[{i}]"),
            format!(
                "params {:?} partner {:?} residual {:.2e}",
                w.params, w.partner_params, w.residual
            ),
            Provenance::Computed,
        );
    }
    if let Some(floor) = out.double_points.residual_floor {
        report.claim(
            "residual-floor",
            format!("{floor:.6}"),
            Provenance::Computed,
        );
    }
    report.set_payload(&out);
    Ok((report, 0))
}

fn cmd_paper_suite(cli: &Cli) -> Result<(Report, i32), String> {
    let mut report = base_report(cli, "paper-suite", Some("all"));
    let outcomes = paper_suite::run(cli.grid);
    let failures = outcomes.iter().filter(|o| !o.pass).count();
    for outcome in &outcomes {
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} [sec {}] expected '{}' computed '{}'",
            outcome.section, outcome.expected, outcome.computed
        );
        if let Some(note) = &outcome.note {
            line.push_str(&format!(" (note: {note})"));
        }
        report.claim(&outcome.id, line, Provenance::PaperExpected);
    }
    report.claim("total-checks", outcomes.len(), Provenance::Computed);
    report.claim("failures", failures, Provenance::Computed);
    report.set_payload(&outcomes);
    Ok((report, i32::from(failures > 0)))
}
