use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::Value;
use thiserror::Error;
use toricmdp::fan::{
    cross_check_t0, in_secondary_cone, interior_weight, kahler_cone, maximal_triangulation,
    point_config,    primitive_relations, property_star, validate, CompletenessFailure, Fan, KahlerCone,
};
use toricmdp::groebner::{
    buchberger_complete, candidate_groebner_basis, chow_ring_dimension, compare_lt_with_sr,
    default_degree_cap, stanley_reisner, unique_index_certificate, Binomial, MonomialIdeal,
    PairDisposition, TermOrder,
};
use toricmdp::linalg::{IntVector, LatticeCoordinates, RatVector};
use toricmdp::series::{
    check_tau, coordinates_x, default_tau, local_series, numeric_period, tau_dual_basis,
    verify_max_degeneracy, FormalSeries, MdpReport,
};

use crate::fanfile::parse_fan_file;
use crate::report::{self, Report, Section, Verdict};

#[derive(Parser, Debug)]
#[command(
    name = "toricmdp",
    version,
    about = "Exact certificates for maximal degeneracy points of GKZ systems of complete regular fans"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check regularity and completeness.
    Validate { file: PathBuf },
    /// Relation lattice, primitive collections and primitive relations.
    Relations { file: PathBuf },
    /// Property (*) by both criteria.
    Star { file: PathBuf },
    /// Closed Kähler cone in coordinates dual to the relation basis.
    Kahler { file: PathBuf },
    /// Verify the primitive-relation binomials as a Gröbner basis.
    Groebner {
        file: PathBuf,
        /// Weight w0,...,wp (integers or fractions); defaults to an interior weight.
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
    },
    /// Unique-index certificate for the exponent (-1,0,...,0).
    Index { file: PathBuf },
    /// Local series coefficients up to total degree N.
    Series {
        file: PathBuf,
        #[arg(long)]
        order: u32,
        /// Generators of tau in dual coordinates, e.g. "1,2;-1,-1".
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
    },
    /// Full maximal-degeneracy certificate.
    CertifyMdp {
        file: PathBuf,
        #[arg(long)]
        order: u32,
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
    },
    /// Compare the quadrature period with the truncated series.
    Oracle {
        file: PathBuf,
        /// Coefficients a0,...,ap; complex values as re:im.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Grid points per circle.
        #[arg(long)]
        grid: usize,
        /// Series truncation order.
        #[arg(long, default_value_t = 10)]
        order: u32,
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
        /// Agreement tolerance.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed or unusable input; exit status 2.
    #[error("{0}")]
    Input(String),
    /// A check could not be carried out because a claim failed; exit status 1.
    #[error("{0}")]
    Falsified(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Falsified(_) => 1,
        }
    }
}

impl From<toricmdp::Error> for CliError {
    fn from(e: toricmdp::Error) -> Self {
        use toricmdp::Error as E;
        match e {
            E::TauInvalid(_)
            | E::DimensionMismatch { .. }
            | E::DimensionBound { .. }
            | E::ConvergenceRegime { .. }
            | E::NearZeroDenominator { .. }
            | E::ZeroCoordinate(_)
            | E::BasisNotInDualCone(_)
            | E::ExponentOverflow(_) => CliError::Input(e.to_string()),
            _ => CliError::Falsified(e.to_string()),
        }
    }
}

/// Exit status of a finished report: 0 when every section passed.
pub fn exit_code(report: &Report) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

pub fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Validate { file } => with_fan(file, "validate", |_, _| Ok(())),
        Command::Relations { file } => with_fan(file, "relations", relations),
        Command::Star { file } => with_fan(file, "star", star),
        Command::Kahler { file } => with_fan(file, "kahler", kahler),
        Command::Groebner { file, omega } => {
            with_fan(file, "groebner", |fan, r| groebner(fan, omega.as_deref(), r))
        }
        Command::Index { file } => with_fan(file, "index", index),
        Command::Series { file, order, tau } => {
            with_fan(file, "series", |fan, r| series(fan, *order, tau.as_deref(), r))
        }
        Command::CertifyMdp { file, order, tau } => {
            with_fan(file, "certify-mdp", |fan, r| certify(fan, *order, tau.as_deref(), r))
        }
        Command::Oracle {
            file,
            a,
            grid,
            order,
            tau,
            tol,
        } => with_fan(file, "oracle", |fan, r| {
            oracle(fan, a, *grid, *order, tau.as_deref(), *tol, r)
        }),
    }
}

/// Loads and validates the fan, then runs `body` if it is valid.
fn with_fan(
    path: &Path,
    command: &str,
    body: impl FnOnce(&Fan, &mut Report) -> Result<(), CliError>,
) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file = parse_fan_file(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let input = file
        .name
        .clone()
        .unwrap_or_else(|| path.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned()));
    let mut report = Report::new(command, &input);

    let base = Section::new("validate", Verdict::Fail)
        .with("dim", report::text(file.dim.to_string()))
        .with("rays", report::vectors(&file.rays))
        .with(
            "cones",
            Value::Array(file.cones.iter().map(|c| report::indices(c)).collect()),
        );
    let fan = match file.to_fan() {
        Ok(fan) => fan,
        Err(e) => {
            report.push(base.witness(e.to_string()));
            return Ok(report);
        }
    };
    let v = validate(&fan);
    let mut section = base
        .with("regular", report::flag(v.regular))
        .with("complete", report::flag(v.complete));
    section.verdict = Verdict::from_bool(v.is_valid());
    if let Some((cone, det)) = &v.singular_cone {
        section = section.witness(format!(
            "cone {cone} (rays {:?}) has determinant {det}",
            fan.max_cones()[*cone]
        ));
    }
    match &v.completeness_failure {
        Some(CompletenessFailure::FaceMultiplicity { face, cones }) => {
            section = section.witness(format!(
                "face {face:?} lies in {} maximal cones {cones:?}",
                cones.len()
            ));
        }
        Some(CompletenessFailure::Disconnected { reached, total }) => {
            section = section.witness(format!(
                "adjacency graph reaches {reached} of {total} maximal cones"
            ));
        }
        None => {}
    }
    report.push(section);
    if !v.is_valid() {
        return Ok(report);
    }
    body(&fan, &mut report)?;
    Ok(report)
}

fn relations(fan: &Fan, report: &mut Report) -> Result<(), CliError> {
    let config = point_config(fan);
    let rels = primitive_relations(fan)?;
    let items: Vec<Value> = rels
        .iter()
        .map(|r| {
            let mut m = serde_json::Map::new();
            m.insert("collection".into(), report::indices(&r.collection.ray_indices));
            m.insert("generators".into(), report::indices(&r.generators));
            m.insert(
                "coefficients".into(),
                Value::Array(r.coefficients.iter().map(report::int).collect()),
            );
            m.insert("c0".into(), report::int(&r.c0));
            m.insert("l".into(), report::vector(&r.relation));
            Value::Object(m)
        })
        .collect();
    report.push(
        Section::new("primitive-relations", Verdict::Pass)
            .with("points", report::vectors(&config.points))
            .with("relation_basis", report::vectors(&config.relation_basis))
            .with("relations", Value::Array(items)),
    );
    Ok(())
}

fn star_section(fan: &Fan) -> Result<(Section, bool), CliError> {
    let s = property_star(fan)?;
    let mut section = Section::new("star", Verdict::from_bool(s.holds()))
        .with("relations_criterion", report::flag(s.relations_criterion))
        .with("boundary_criterion", report::flag(s.boundary_criterion))
        .with(
            "l0",
            Value::Array(s.relations.iter().map(|r| report::int(r.l0())).collect()),
        );
    for &i in &s.positive_relations {
        let r = &s.relations[i];
        section = section.witness(format!(
            "collection {:?} has l0 = {}",
            r.collection.ray_indices,
            r.l0()
        ));
    }
    for &i in &s.interior_rays {
        section = section.witness(format!(
            "ray {i} = {} lies inside the convex hull of the rays",
            fan.rays()[i]
        ));
    }
    Ok((section, s.holds()))
}

fn star(fan: &Fan, report: &mut Report) -> Result<(), CliError> {
    report.push(star_section(fan)?.0);
    Ok(())
}

fn kahler_section(fan: &Fan) -> Result<(Section, KahlerCone), CliError> {
    let k = kahler_cone(fan)?;
    let config = point_config(fan);
    let mut section = Section::new("kahler", Verdict::from_bool(k.is_large))
        .with("relation_basis", report::vectors(&config.relation_basis))
        .with("generators", report::vectors(k.cone.generators()))
        .with("relation_coordinates", report::vectors(&k.relation_coords))
        .with("large", report::flag(k.is_large))
        .with("regular", report::flag(k.is_regular));
    if !k.is_large {
        section = section.witness(format!(
            "dimension {} below the relation rank {}",
            k.cone.dimension(),
            k.cone.ambient_dim()
        ));
    }
    Ok((section, k))
}

fn kahler(fan: &Fan, report: &mut Report) -> Result<(), CliError> {
    report.push(kahler_section(fan)?.0);
    Ok(())
}

/// Star and Kähler sections; returns the cone when both hypotheses hold.
fn hypotheses(fan: &Fan, report: &mut Report) -> Result<Option<KahlerCone>, CliError> {
    let (star, holds) = star_section(fan)?;
    report.push(star);
    if !holds {
        return Ok(None);
    }
    let (section, k) = kahler_section(fan)?;
    report.push(section);
    Ok(k.is_large.then_some(k))
}

fn binomials(bs: &[Binomial]) -> Value {
    Value::Array(bs.iter().map(|b| report::text(b.to_string())).collect())
}

fn ideal(i: &MonomialIdeal) -> Value {
    Value::Array(i.generators().iter().map(|m| report::text(m.to_string())).collect())
}

fn groebner(fan: &Fan, omega: Option<&str>, report: &mut Report) -> Result<(), CliError> {
    if hypotheses(fan, report)?.is_none() {
        return Ok(());
    }
    let omega = match omega {
        Some(text) => {
            let w = parse_rationals(text)?;
            if w.len() != fan.ray_count() + 1 {
                return Err(CliError::Input(format!(
                    "omega has {} entries, expected {}",
                    w.len(),
                    fan.ray_count() + 1
                )));
            }
            w
        }
        None => interior_weight(fan)?.to_rat(),
    };
    let sr = stanley_reisner(&maximal_triangulation(fan), fan.ray_count());
    if in_secondary_cone(fan, &omega, true)? {
        let cmp = compare_lt_with_sr(fan, &omega)?;
        let pairs: Vec<Value> = cmp
            .verify
            .pairs
            .iter()
            .map(|p| {
                let d = match &p.disposition {
                    PairDisposition::Coprime => "coprime leading terms".to_string(),
                    PairDisposition::ReducedToZero => "reduces to zero".to_string(),
                    PairDisposition::Remainder(b) => format!("remainder {b}"),
                };
                report::text(format!("({}, {}): {d}", p.first, p.second))
            })
            .collect();
        report.push(
            Section::new("groebner", Verdict::from_bool(cmp.verify.verified && cmp.equal()))
                .with("omega", report::rat_vector(&omega))
                .with("basis", binomials(&cmp.verify.basis))
                .with("pairs", Value::Array(pairs))
                .with("leading_ideal", ideal(&cmp.leading_ideal))
                .with("stanley_reisner", ideal(&cmp.stanley_reisner))
                .with("equal", report::flag(cmp.equal())),
        );
        let agrees = cross_check_t0(fan, &omega)?;
        report.push(
            Section::new("triangulation", Verdict::from_bool(agrees))
                .with("omega", report::rat_vector(&omega))
                .with("matches_maximal_triangulation", report::flag(agrees)),
        );
    } else {
        let order = TermOrder::new(omega.clone());
        let gens = candidate_groebner_basis(fan)?;
        let gb = buchberger_complete(&gens, &order, default_degree_cap(&gens))?;
        let lt = MonomialIdeal::new(gb.iter().map(|b| b.plus.clone()).collect());
        report.push(
            Section::new("groebner", Verdict::Fail)
                .witness("omega is not strictly inside the Kähler cone")
                .with("omega", report::rat_vector(&omega))
                .with("completed_basis", binomials(&gb))
                .with("leading_ideal", ideal(&lt))
                .with("stanley_reisner", ideal(&sr))
                .with("equal", report::flag(lt == sr)),
        );
    }
    Ok(())
}

fn index(fan: &Fan, report: &mut Report) -> Result<(), CliError> {
    if hypotheses(fan, report)?.is_none() {
        return Ok(());
    }
    report.push(index_section(fan)?);
    Ok(())
}

fn index_section(fan: &Fan) -> Result<Section, CliError> {
    let r = unique_index_certificate(fan)?;
    let mut section = Section::new("index", Verdict::from_bool(r.passes()))
        .with("gamma", report::rat_vector(&r.gamma))
        .with("cones_independent", report::flag(r.cones_independent))
        .with("euler_constraint", report::flag(r.euler_constraint))
        .with("relations", report::vectors(&r.relations))
        .with(
            "indicial_vanishes",
            Value::Array(r.vanishing.iter().map(|&b| report::flag(b)).collect()),
        )
        .with(
            "positive_entry",
            Value::Array(r.positive_entry.iter().map(|&b| report::flag(b)).collect()),
        )
        .with("chow_ring_dimension", report::text(chow_ring_dimension(fan).to_string()));
    for (i, l) in r.relations.iter().enumerate() {
        if !r.vanishing[i] || !r.positive_entry[i] {
            section = section.witness(format!("relation {l} fails the index test"));
        }
    }
    Ok(section)
}

fn resolve_tau(k: &KahlerCone, tau: Option<&str>) -> Result<Vec<IntVector>, CliError> {
    let tau = match tau {
        Some(text) => parse_tau(text)?,
        None => default_tau(k)?,
    };
    check_tau(k, &tau)?;
    Ok(tau)
}

fn tau_section(tau: &[IntVector], dual: &[IntVector]) -> Section {
    Section::new("tau", Verdict::Pass)
        .with("generators", report::vectors(tau))
        .with("dual_basis", report::vectors(dual))
}

fn coefficient_table(series: &FormalSeries, basis: &[IntVector]) -> Value {
    let coords = LatticeCoordinates::new(basis).expect("dual basis is independent");
    let mut rows: Vec<(IntVector, IntVector, BigRational)> = series
        .terms
        .keys()
        .map(|l| {
            let m = coords.integer_coordinates(l).expect("key lies in the basis lattice");
            (m, l.clone(), series.x_coefficient(l))
        })
        .collect();
    rows.sort_by(|a, b| a.0.sum().cmp(&b.0.sum()).then_with(|| a.0.cmp(&b.0)));
    Value::Array(
        rows.iter()
            .map(|(m, l, c)| {
                let mut o = serde_json::Map::new();
                o.insert("m".into(), report::vector(m));
                o.insert("l".into(), report::vector(l));
                o.insert("coefficient".into(), report::rat(c));
                Value::Object(o)
            })
            .collect(),
    )
}

fn series(fan: &Fan, order: u32, tau: Option<&str>, report: &mut Report) -> Result<(), CliError> {
    let Some(k) = hypotheses(fan, report)? else {
        return Ok(());
    };
    let tau = resolve_tau(&k, tau)?;
    let dual = tau_dual_basis(fan, &tau)?;
    report.push(tau_section(&tau, &dual));
    let s = local_series(fan, &dual, order)?;
    report.push(
        Section::new("series", Verdict::Pass)
            .with("order", report::text(order.to_string()))
            .with("gamma", report::rat_vector(&s.gamma))
            .with("coefficients", coefficient_table(&s, &dual)),
    );
    Ok(())
}

fn certify(fan: &Fan, order: u32, tau: Option<&str>, report: &mut Report) -> Result<(), CliError> {
    let Some(k) = hypotheses(fan, report)? else {
        report.push(Section::new("mdp", Verdict::Fail).witness("hypotheses fail"));
        return Ok(());
    };
    let tau = resolve_tau(&k, tau)?;
    let mdp: MdpReport = verify_max_degeneracy(fan, Some(&tau), order)?;
    report.push(tau_section(&mdp.tau, &mdp.dual_basis));
    if mdp.index.is_some() {
        report.push(index_section(fan)?);
    }
    if let Some(ex) = &mdp.existence {
        let ops: Vec<Value> = ex
            .annihilation
            .operators
            .iter()
            .map(|o| {
                let mut m = serde_json::Map::new();
                m.insert("operator".into(), report::vector(&o.operator));
                m.insert("interior_terms".into(), report::text(o.interior_terms.to_string()));
                m.insert("boundary_terms".into(), report::text(o.boundary_terms.to_string()));
                m.insert(
                    "interior_failures".into(),
                    Value::Array(
                        o.interior_failures
                            .iter()
                            .map(|(l, c)| report::text(format!("{l}: {c}")))
                            .collect(),
                    ),
                );
                Value::Object(m)
            })
            .collect();
        report.push(
            Section::new("series", Verdict::from_bool(ex.passes()))
                .with("order", report::text(order.to_string()))
                .with("terms", report::text(ex.series.len().to_string()))
                .with("coefficients", coefficient_table(&ex.series, &mdp.dual_basis))
                .with("annihilation", Value::Array(ops))
                .with("euler_residual_zero", report::flag(ex.euler_zero))
                .with("constant_term_one", report::flag(ex.constant_term_one)),
        );
    }
    report.push(
        Section::new("mdp", Verdict::from_bool(mdp.certified()))
            .with("certified", report::flag(mdp.certified()))
            .with("gamma", report::text("(-1,0,...,0)")),
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn oracle(
    fan: &Fan,
    a: &str,
    grid: usize,
    order: u32,
    tau: Option<&str>,
    tol: f64,
    report: &mut Report,
) -> Result<(), CliError> {
    let Some(k) = hypotheses(fan, report)? else {
        return Ok(());
    };
    let a = parse_complexes(a)?;
    let config = point_config(fan);
    if a.len() != config.len() {
        return Err(CliError::Input(format!(
            "--a has {} entries, expected {}",
            a.len(),
            config.len()
        )));
    }
    let tau = resolve_tau(&k, tau)?;
    let dual = tau_dual_basis(fan, &tau)?;
    let period = numeric_period(&config, &a, grid)?;
    let x = coordinates_x(&dual, &a)?;
    let s = local_series(fan, &dual, order)?;
    let value = s
        .evaluate_x(&x)
        .ok_or_else(|| CliError::Falsified("series keys off the dual basis lattice".into()))?;
    let diff = (period - value).norm();
    let mut data = BTreeMap::new();
    data.insert("a".to_string(), Value::Array(a.iter().map(|&z| report::complex(z)).collect()));
    data.insert("x".to_string(), Value::Array(x.iter().map(|&z| report::complex(z)).collect()));
    data.insert("grid".to_string(), report::text(grid.to_string()));
    data.insert("order".to_string(), report::text(order.to_string()));
    data.insert("quadrature".to_string(), report::complex(period));
    data.insert("series".to_string(), report::complex(value));
    data.insert("difference".to_string(), report::float(diff));
    data.insert("tolerance".to_string(), report::float(tol));
    let mut section = Section::new("oracle", Verdict::from_bool(diff <= tol));
    section.data = data;
    if diff > tol {
        section = section.witness(format!("|quadrature - series| = {diff:e} exceeds {tol:e}"));
    }
    report.push(section);
    Ok(())
}

/// Comma-separated integers or fractions.
pub fn parse_rationals(text: &str) -> Result<RatVector, CliError> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigRational>()
                .map_err(|_| CliError::Input(format!("invalid rational `{t}`")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(RatVector)
}

/// Semicolon-separated generators, each comma-separated integers.
pub fn parse_tau(text: &str) -> Result<Vec<IntVector>, CliError> {
    text.split(';')
        .map(|g| {
            g.split(',')
                .map(|t| {
                    let t = t.trim();
                    t.parse()
                        .map_err(|_| CliError::Input(format!("invalid integer `{t}` in tau")))
                })
                .collect::<Result<Vec<_>, _>>()
                .map(IntVector)
        })
        .collect()
}

/// Comma-separated complex numbers written `re` or `re:im`.
pub fn parse_complexes(text: &str) -> Result<Vec<Complex64>, CliError> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            let bad = || CliError::Input(format!("invalid complex number `{t}`"));
            let (re, im) = match t.split_once(':') {
                Some((re, im)) => (re, im),
                None => (t, "0"),
            };
            let re: f64 = re.trim().parse().map_err(|_| bad())?;
            let im: f64 = im.trim().parse().map_err(|_| bad())?;
            if !re.is_finite() || !im.is_finite() {
                return Err(bad());
            }
            Ok(Complex64::new(re, im))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flag_values() {
        assert_eq!(parse_rationals("0,1/2,-3").unwrap(), RatVector::from_fractions(&[(0, 1), (1, 2), (-3, 1)]));
        assert!(parse_rationals("1,x").is_err());
        assert_eq!(
            parse_tau("1,2;-1,-1").unwrap(),
            vec![IntVector::from_i64s(&[1, 2]), IntVector::from_i64s(&[-1, -1])]
        );
        assert!(parse_tau("1,2;").is_err());
        assert_eq!(
            parse_complexes("1, 0.5:-0.25").unwrap(),
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.5, -0.25)]
        );
        assert!(parse_complexes("nan").is_err());
    }
}
