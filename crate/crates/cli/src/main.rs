use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use ordplane_core::configs::group::{from_json, to_json};
use ordplane_core::configs::{
    antiprism, canonical_cusp_curve, coset_cyclic, coset_two_component, cuspidal_integers_config, nodal_roots_config,
    prism, random_rational_config, Family, GeomConfig, Geometry, GroupConfig,
};
use ordplane_core::counting::{
    formula_max_4pt, group_histogram, max_4pt_search, plane_histogram_float, plane_histogram_with, Backend,
    CountReport, PlaneHistogram,
};
use ordplane_core::format::{
    format_float, parse_curve, parse_point_file, round_sig12, write_float_points, write_points, PointFile,
};
use ordplane_core::quartic::{
    classify_species, fundamental_quartic, group_parametrization, sylvester_decompose, CanonicalForm,
    GroupModelQuartic, LinearForm, QuarticCurve,
};
use ordplane_core::{Error, HPoint};

mod suites;

const EXIT_INTERNAL: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "ordplane", version, about = "Ordinary planes, space quartics and incidence counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Family descriptor, e.g. "prism:6" or "random:30:7:1000"; a bare name
    /// takes its parameters from the flags below.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    offset: Option<usize>,
    #[arg(long)]
    parity: Option<usize>,
    /// Coordinate bound for random families.
    #[arg(long, default_value_t = 1000)]
    bound: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Write a configuration as a point set or a group-model JSON file.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count planes of a point set, a group model or a generated family.
    Count {
        /// Point-set file, float point file or group-model JSON.
        input: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 1e-9)]
        epsilon: f64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// json: count report; csv: plane histogram.
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        /// Report runtime_ms as null so output is byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
    /// Species of a curve file "p q r s".
    Classify {
        curve: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Canonical form of a curve's fundamental quartic and its group model.
    Decompose {
        curve: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run self-check suites: coplanar, species, sl2, identity, group,
    /// projection, or all.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the 4-point-plane formula with the group-model maximum.
    Max4pt {
        #[arg(long, default_value_t = 8)]
        from: usize,
        #[arg(long, default_value_t = 40)]
        to: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count growth over sizes for a family with a `*` size field.
    Growth {
        #[arg(long)]
        family: String,
        /// Comma-separated sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_enum, default_value = "ordinary")]
        count: GrowthCount,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GrowthCount {
    Ordinary,
    Quadruples,
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn resolve_family(args: &FamilyArgs) -> anyhow::Result<Family> {
    let Some(name) = &args.family else { bail!(Error::InvalidParameter("no --family given".into())) };
    if name.contains(':') {
        return Ok(name.parse()?);
    }
    let need_n = || args.n.ok_or_else(|| Error::InvalidParameter(format!("family `{name}` needs --n")));
    let family = match name.as_str() {
        "prism" => Family::Prism { m: need_n()? },
        "antiprism" => Family::Antiprism { m: need_n()? },
        "coset" => Family::Coset { n: need_n()?, c0: args.offset.unwrap_or(0) },
        "coset2" => Family::Coset2 {
            n: need_n()?,
            c0: args.offset.unwrap_or(0),
            parity: args.parity.ok_or_else(|| Error::InvalidParameter("coset2 needs --parity".into()))?,
        },
        "nodal-roots" => Family::NodalRoots { n: need_n()? },
        "cusp-ints" => Family::CuspInts { n: need_n()? },
        "random" => Family::Random {
            n: need_n()?,
            seed: args.seed.ok_or_else(|| Error::InvalidParameter("random families need --seed".into()))?,
            bound: args.bound,
        },
        other => bail!(Error::InvalidParameter(format!("unknown family `{other}`"))),
    };
    Ok(family)
}

/// A realised family: exact points, float points with a twin model, or a
/// pure group model.
enum Realised {
    Exact(GeomConfig),
    Float { geom: GeomConfig, twin: GroupConfig },
    Model(GroupConfig),
}

fn nodal_curve() -> QuarticCurve {
    QuarticCurve::from_ints(-1, 0, 0, 0).expect("non-degenerate")
}

fn realise(family: Family) -> ordplane_core::Result<Realised> {
    Ok(match family {
        Family::Prism { m } => {
            let (geom, twin) = prism(m)?;
            Realised::Float { geom, twin }
        }
        Family::Antiprism { m } => {
            let (geom, twin) = antiprism(m)?;
            Realised::Float { geom, twin }
        }
        Family::Coset { n, c0 } => Realised::Model(coset_cyclic(n, c0)?),
        Family::Coset2 { n, c0, parity } => Realised::Model(coset_two_component(n, c0, parity)?),
        Family::NodalRoots { n } => Realised::Model(nodal_roots_config(&nodal_curve(), n)?.model),
        Family::CuspInts { n } => {
            let ints = cuspidal_integers_config(n)?;
            let curve = canonical_cusp_curve();
            let points = ints.params.iter().map(|t| curve.point_at(t)).collect();
            let mut geom = GeomConfig::new(Geometry::Exact(points), family.to_string(), None);
            geom.provenance.family = family.to_string();
            Realised::Exact(geom)
        }
        Family::Random { n, seed, bound } => Realised::Exact(random_rational_config(n, seed, bound)?),
    })
}

fn cmd_generate(args: &FamilyArgs, out: Option<&Path>) -> anyhow::Result<()> {
    let family = resolve_family(args)?;
    match realise(family)? {
        Realised::Exact(geom) => {
            let text = format!("# {}\n{}", family, write_points(geom.exact_points().expect("exact")));
            emit(out, &text)
        }
        Realised::Float { geom, twin } => {
            let Geometry::Float { points, .. } = &geom.geometry else { unreachable!("float family") };
            let text = format!("# {}\n# model {}{}", family, to_json(&twin), write_float_points(points));
            emit(out, &text)?;
            if let Some(path) = out {
                let mut model = path.as_os_str().to_owned();
                model.push(".model.json");
                fs::write(&model, to_json(&twin)).context("writing twin model")?;
            }
            Ok(())
        }
        Realised::Model(cfg) => {
            emit(out, &to_json(&cfg))?;
            if let (Family::NodalRoots { n }, Some(path)) = (family, out) {
                let roots = nodal_roots_config(&nodal_curve(), n)?;
                let mut params = path.as_os_str().to_owned();
                params.push(".params");
                let text: String =
                    roots.params.iter().map(|z| format!("{} {}\n", format_float(z.re), format_float(z.im))).collect();
                fs::write(&params, format!("# parameters on the curve -1 0 0 0, as re im\n{text}"))
                    .context("writing parameters")?;
            }
            Ok(())
        }
    }
}

struct Counted {
    hist: PlaneHistogram,
    backend: Backend,
    points: Option<Vec<HPoint>>,
}

fn count_realised(realised: Realised, epsilon: f64, jobs: usize) -> ordplane_core::Result<Counted> {
    Ok(match realised {
        Realised::Exact(geom) => {
            let points = geom.exact_points().expect("exact").to_vec();
            Counted {
                hist: plane_histogram_with(&points, jobs)?,
                backend: Backend::ExactGeometric,
                points: Some(points),
            }
        }
        Realised::Float { geom, .. } => {
            let Geometry::Float { points, .. } = &geom.geometry else { unreachable!("float family") };
            Counted {
                hist: plane_histogram_float(points, epsilon)?,
                backend: Backend::FloatGeometric(epsilon),
                points: None,
            }
        }
        Realised::Model(cfg) => {
            Counted { hist: group_histogram(&cfg, None), backend: Backend::GroupModel, points: None }
        }
    })
}

fn load_input(path: &Path) -> anyhow::Result<Realised> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if text.trim_start().starts_with('{') {
        return Ok(Realised::Model(from_json(&text)?));
    }
    let family = path.display().to_string();
    Ok(match parse_point_file(&text)? {
        PointFile::Exact(points) => Realised::Exact(GeomConfig::new(Geometry::Exact(points), family, None)),
        PointFile::Float(points) => {
            let geom = GeomConfig::new(Geometry::Float { points, epsilon: 1e-9 }, family, None);
            // Float files carry no twin model; the count uses geometry only.
            Realised::Float { twin: GroupConfig::cyclic(4, 0)?, geom }
        }
    })
}

fn histogram_csv(c: &Counted) -> anyhow::Result<String> {
    if let Some(points) = &c.points {
        return Ok(c.hist.to_csv(points)?);
    }
    // Without exact coordinates the witness triple names the plane.
    let mut out = String::from("plane_key,count\n");
    for e in c.hist.planes() {
        let [a, b, w] = e.witness;
        out.push_str(&format!("{a} {b} {w},{}\n", e.count));
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_count(
    input: Option<&Path>,
    family: &FamilyArgs,
    epsilon: f64,
    jobs: usize,
    out: Option<&Path>,
    format: OutputFormat,
    no_timing: bool,
) -> anyhow::Result<()> {
    let realised = match input {
        Some(path) => load_input(path)?,
        None => realise(resolve_family(family)?)?,
    };
    let start = Instant::now();
    let counted = count_realised(realised, epsilon, jobs)?;
    let runtime = (!no_timing).then(|| start.elapsed().as_millis() as u64);
    match format {
        OutputFormat::Json => emit(out, &CountReport::new(&counted.hist, counted.backend, runtime).to_json()),
        OutputFormat::Csv => emit(out, &histogram_csv(&counted)?),
    }
}

#[derive(Serialize)]
struct SpeciesJson {
    curve: String,
    species: &'static str,
    catalecticant: String,
    nullity: usize,
    pencil_basis: Vec<Vec<Vec<String>>>,
}

fn cmd_classify(path: &Path, out: Option<&Path>) -> anyhow::Result<()> {
    let curve = parse_curve(&fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?)?;
    let report = classify_species(&curve);
    let json = SpeciesJson {
        curve: curve.to_string(),
        species: match report.species {
            ordplane_core::quartic::Species::First => "first",
            ordplane_core::quartic::Species::Second => "second",
        },
        catalecticant: report.catalecticant.to_string(),
        nullity: report.nullity,
        pencil_basis: report
            .pencil_basis
            .iter()
            .map(|m| m.iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect())
            .collect(),
    };
    emit(out, &(serde_json::to_string_pretty(&json)? + "\n"))
}

#[derive(Serialize)]
struct ComplexJson {
    re: f64,
    im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: round_sig12(z.re), im: round_sig12(z.im) }
    }
}

#[derive(Serialize)]
struct LinearJson {
    a: ComplexJson,
    b: ComplexJson,
}

impl From<&LinearForm> for LinearJson {
    fn from(l: &LinearForm) -> Self {
        LinearJson { a: l.a.into(), b: l.b.into() }
    }
}

#[derive(Serialize)]
struct GroupJson {
    kind: &'static str,
    moebius: Option<[ComplexJson; 4]>,
    c: Option<ComplexJson>,
    d: Option<ComplexJson>,
    shift: Option<ComplexJson>,
}

#[derive(Serialize)]
struct DecomposeJson {
    curve: String,
    form: &'static str,
    linear_forms: Vec<LinearJson>,
    residual: f64,
    group_model: Option<GroupJson>,
    group_error: Option<String>,
}

fn cmd_decompose(path: &Path, out: Option<&Path>) -> anyhow::Result<()> {
    let curve = parse_curve(&fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?)?;
    let d = sylvester_decompose(&fundamental_quartic(&curve))?;
    let linear_forms = match &d.form {
        CanonicalForm::FourthPower(l) => vec![l.into()],
        CanonicalForm::PowerSum(l1, l2) => vec![l1.into(), l2.into()],
        CanonicalForm::LinearTimesCube { linear, cubed } => vec![linear.into(), cubed.into()],
    };
    let (group_model, group_error) = match group_parametrization(&curve) {
        Ok(GroupModelQuartic::NodalProduct { moebius, .. }) => (
            Some(GroupJson {
                kind: "nodal_product",
                moebius: Some(moebius.map(Into::into)),
                c: None,
                d: None,
                shift: None,
            }),
            None,
        ),
        Ok(GroupModelQuartic::CuspidalSum { c, d, shift }) => (
            Some(GroupJson {
                kind: "cuspidal_sum",
                moebius: None,
                c: Some(c.into()),
                d: Some(d.into()),
                shift: Some(shift.into()),
            }),
            None,
        ),
        Err(e) => (None, Some(e.to_string())),
    };
    let json = DecomposeJson {
        curve: curve.to_string(),
        form: d.form.name(),
        linear_forms,
        residual: round_sig12(d.residual),
        group_model,
        group_error,
    };
    emit(out, &(serde_json::to_string_pretty(&json)? + "\n"))
}

fn cmd_verify(suite: &str, seed: u64, out: Option<&Path>) -> anyhow::Result<bool> {
    let names: Vec<&str> = if suite == "all" { suites::SUITES.to_vec() } else { vec![suite] };
    let mut table = String::from("suite,passed,total,status\n");
    let mut all_ok = true;
    for name in names {
        let outcome =
            suites::run(name, seed).ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{name}`")))?;
        all_ok &= outcome.ok();
        let status = if outcome.ok() { "pass" } else { "fail" };
        table.push_str(&format!("{},{},{},{}\n", outcome.suite, outcome.passed, outcome.total, status));
    }
    emit(out, &table)?;
    Ok(all_ok)
}

fn witness_descriptor(cfg: &GroupConfig) -> String {
    match *cfg {
        GroupConfig::Cyclic { n, c0 } => format!("coset:{n}:{c0}"),
        GroupConfig::TwoComponent { n, c0, parity } => format!("coset2:{n}:{c0}:{parity}"),
        GroupConfig::CirclePair { m, .. } => format!("circle-pair:{m}"),
    }
}

fn cmd_max4pt(from: usize, to: usize, out: Option<&Path>) -> anyhow::Result<()> {
    if from < 8 || to < from {
        bail!(Error::InvalidParameter(format!("need 8 <= from <= to, got {from}..{to}")));
    }
    let mut csv = String::from("n,formula,search,witness,agree\n");
    for n in from..=to {
        let formula = formula_max_4pt(n as u64)?;
        let (search, witness) = max_4pt_search(n)?;
        csv.push_str(&format!("{n},{formula},{search},{},{}\n", witness_descriptor(&witness), formula == search));
    }
    emit(out, &csv)
}

fn cmd_growth(
    family: &str,
    sizes: &[usize],
    count: GrowthCount,
    jobs: usize,
    out: Option<&Path>,
) -> anyhow::Result<()> {
    let mut csv = String::from("n,count,count_per_n2,count_per_n3\n");
    for &n in sizes {
        let fam = Family::parse_with_size(family, n)?;
        let counted = count_realised(realise(fam)?, 1e-9, jobs)?;
        let value = match count {
            GrowthCount::Ordinary => counted.hist.ordinary_planes(),
            GrowthCount::Quadruples => counted.hist.coplanar_quadruples(),
        };
        let size = counted.hist.source_size() as f64;
        csv.push_str(&format!(
            "{},{value},{},{}\n",
            counted.hist.source_size(),
            format_float(value as f64 / (size * size)),
            format_float(value as f64 / (size * size * size))
        ));
    }
    emit(out, &csv)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Generate { family, out } => cmd_generate(&family, out.as_deref())?,
        Command::Count { input, family, epsilon, jobs, out, format, no_timing } => {
            cmd_count(input.as_deref(), &family, epsilon, jobs, out.as_deref(), format, no_timing)?
        }
        Command::Classify { curve, out } => cmd_classify(&curve, out.as_deref())?,
        Command::Decompose { curve, out } => cmd_decompose(&curve, out.as_deref())?,
        Command::Verify { suite, seed, out } => {
            if !cmd_verify(&suite, seed, out.as_deref())? {
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
        }
        Command::Max4pt { from, to, out } => cmd_max4pt(from, to, out.as_deref())?,
        Command::Growth { family, n, count, jobs, out } => cmd_growth(&family, &n, count, jobs, out.as_deref())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let precondition = err.downcast_ref::<Error>().is_some_and(Error::is_precondition);
            ExitCode::from(if precondition { EXIT_PRECONDITION } else { EXIT_INTERNAL })
        }
    }
}
