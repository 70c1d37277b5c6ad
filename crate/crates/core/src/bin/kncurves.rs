use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use kncurves::components::{ComponentProfile, Side};
use kncurves::intersect::{intersect_all, intersect_elementary, ElementaryCurve};
use kncurves::large::{large_counts, LargeComponentCounts};
use kncurves::oracle::{diagram_for, selftest, SelftestReport};
use kncurves::render::{render_svg, RenderSpec};
use kncurves::{
    coordinatize, format_coords, invert, parse_coords, parse_coords_any, parse_triangle, profile,
    validate, DynnikovCoordinates, Error, TriangleCoordinates,
};

/// Multicurves on the genus-two non-orientable surface with n punctures.
#[derive(Parser)]
#[command(name = "kncurves", version)]
struct Cli {
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dynnikov coordinates to triangle coordinates.
    Invert(Input),
    /// Triangle coordinates `(alpha; beta; gamma; c1,c2)` to Dynnikov coordinates.
    Coordinatize(Input),
    /// Path-component counts per region.
    Profile {
        #[command(flatten)]
        input: Input,
        /// Also count large components over regions l..=m (0 = S0, n = S'1, n+1 = S'2).
        #[arg(long, num_args = 2, value_names = ["L", "M"])]
        large: Option<Vec<usize>>,
    },
    /// Intersection numbers with elementary curves.
    Intersect {
        #[command(flatten)]
        input: Input,
        /// A curve such as `Cij:2,3`, `Cprime1:2`, `Cprime2:3`, `C` or `D`.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        curve: Option<String>,
        /// Every curve in the catalog.
        #[arg(long)]
        all: bool,
    },
    /// SVG drawing of the multicurve.
    Render {
        #[command(flatten)]
        input: Input,
        /// Write the SVG here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Compare formulas with the strand-tracing oracle on a grid.
    Selftest {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Entries range over [-bound, bound], with c in [0, bound].
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
}

#[derive(Args)]
struct Input {
    /// Coordinates in canonical text form or as JSON.
    coords: Option<String>,
    /// Read the coordinates from a file.
    #[arg(long, conflicts_with = "coords")]
    file: Option<PathBuf>,
    /// Number of punctures; inferred from the input when omitted.
    #[arg(long)]
    n: Option<usize>,
}

enum Failure {
    Input(String),
    Inconsistent(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotEmbedded(_) | Error::EndpointMismatch { .. } => {
                Failure::Inconsistent(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CliResult = Result<String, Failure>;

impl Input {
    fn text(&self) -> Result<String, Failure> {
        match (&self.coords, &self.file) {
            (Some(t), None) => Ok(t.clone()),
            (None, Some(path)) => fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
            _ => Err(Failure::Input(
                "give coordinates as an argument or with --file".into(),
            )),
        }
    }

    fn check_n(&self, n: usize) -> Result<(), Failure> {
        match self.n {
            Some(expected) if expected != n => Err(Error::DimensionMismatch(format!(
                "input describes n = {n}, but --n {expected} was given"
            ))
            .into()),
            _ => Ok(()),
        }
    }

    fn dynnikov(&self) -> Result<DynnikovCoordinates, Failure> {
        let text = self.text()?;
        let coords = if text.trim_start().starts_with('{') {
            let v: DynnikovCoordinates =
                serde_json::from_str(&text).map_err(|e| Failure::Input(e.to_string()))?;
            v.check_dimensions()?;
            v
        } else {
            match self.n {
                Some(n) => parse_coords(&text, n)?,
                None => parse_coords_any(&text)?,
            }
        };
        self.check_n(coords.n)?;
        Ok(validate(&coords)?.into_inner())
    }

    fn triangle(&self) -> Result<TriangleCoordinates, Failure> {
        let text = self.text()?;
        let tri = if text.trim_start().starts_with('{') {
            let t: TriangleCoordinates =
                serde_json::from_str(&text).map_err(|e| Failure::Input(e.to_string()))?;
            t.check_shape()?;
            t
        } else {
            parse_triangle(&text)?
        };
        self.check_n(tri.n)?;
        Ok(tri)
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn table(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

fn row(k: impl Into<String>, v: impl ToString) -> (String, String) {
    (k.into(), v.to_string())
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_invert(input: &Input, json: bool) -> CliResult {
    let tri = invert(&input.dynnikov()?)?;
    if json {
        return Ok(to_json(&tri));
    }
    Ok(table(&[
        row("alpha", join(&tri.alpha)),
        row("beta", join(&tri.beta)),
        row("gamma", tri.gamma),
        row("c", join(&tri.c)),
    ]))
}

fn cmd_coordinatize(input: &Input, json: bool) -> CliResult {
    let v = coordinatize(&input.triangle()?)?;
    if json {
        return Ok(to_json(&v));
    }
    Ok(table(&[
        row("a", join(&v.a)),
        row("b", join(&v.b)),
        row("t", v.t),
        row("c", join(&v.c)),
        row("text", format_coords(&v)),
    ]))
}

fn side(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
        Side::None => "-",
    }
}

fn profile_rows(p: &ComponentProfile) -> Vec<(String, String)> {
    let mut rows = vec![row("S0 loops", p.s0_loops)];
    for (i, r) in p.regions.iter().enumerate() {
        rows.push(row(
            format!("S{}", i + 1),
            format!(
                "above {}  below {}  loops {} ({})",
                r.above,
                r.below,
                r.loops,
                side(r.side)
            ),
        ));
    }
    let c1 = &p.crosscap1;
    rows.push(row(
        "S'1",
        format!(
            "above {}  below {}  straight cores {}  loops {} ({})  core loops {}",
            c1.above,
            c1.below,
            c1.straight_cores,
            c1.noncore_loops,
            side(c1.side),
            c1.core_loops
        ),
    ));
    rows.push(row(
        "S'2",
        format!(
            "loops {}  core loops {}",
            p.crosscap2.noncore_loops, p.crosscap2.core_loops
        ),
    ));
    for (k, np) in p.nonprimitive.iter().enumerate() {
        if !np.is_empty() {
            rows.push(row(
                format!("c{} content", k + 1),
                format!("core {}  bounding {}", np.core, np.bounding),
            ));
        }
    }
    rows
}

fn large_rows(c: &LargeComponentCounts) -> Vec<(String, String)> {
    vec![
        row("range", format!("{}..={}", c.l, c.m)),
        row("A_lm B_lm", format!("{} {}", c.a_lm, c.b_lm)),
        row("A'_l1 B'_l1", format!("{} {}", c.ap_l1, c.bp_l1)),
        row(
            "R_lm R'_l1 R'_l2",
            format!("{} {} {}", c.r_lm, c.rp_l1, c.rp_l2),
        ),
        row("L_lm L'_l1", format!("{} {}", c.l_lm, c.lp_l1)),
    ]
}

fn cmd_profile(input: &Input, large: Option<&[usize]>, json: bool) -> CliResult {
    let p = profile(&invert(&input.dynnikov()?)?)?;
    let counts = match large {
        Some(&[l, m]) => Some(large_counts(&p, l, m)?),
        Some(_) => return Err(Failure::Input("--large takes two region indices".into())),
        None => None,
    };
    if json {
        return Ok(match counts {
            Some(c) => to_json(&json!({ "profile": p, "large": c })),
            None => to_json(&p),
        });
    }
    let mut rows = profile_rows(&p);
    if let Some(c) = counts {
        rows.extend(large_rows(&c));
    }
    Ok(table(&rows))
}

fn cmd_intersect(input: &Input, curve: Option<&str>, json: bool) -> CliResult {
    let v = input.dynnikov()?;
    let values = match curve {
        Some(name) => {
            let curve: ElementaryCurve = name.parse()?;
            vec![(curve, intersect_elementary(&v, curve)?)]
        }
        None => intersect_all(&v)?,
    };
    if json {
        let items: Vec<_> = values
            .iter()
            .map(|(c, value)| json!({ "curve": c.to_string(), "value": value }))
            .collect();
        return Ok(match items.as_slice() {
            [one] if curve.is_some() => serde_json::to_string(one).expect("json") + "\n",
            _ => to_json(&items),
        });
    }
    Ok(table(
        &values
            .iter()
            .map(|(c, value)| row(c.to_string(), value))
            .collect::<Vec<_>>(),
    ))
}

fn cmd_render(input: &Input, output: Option<&PathBuf>) -> CliResult {
    let d = diagram_for(&input.dynnikov()?)?;
    let svg = render_svg(&d, &RenderSpec::default())?;
    match output {
        Some(path) => {
            fs::write(path, svg).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(svg),
    }
}

fn selftest_text(r: &SelftestReport) -> String {
    let mut rows = vec![
        row("n", r.n),
        row("bound", r.bound),
        row("vectors", r.vectors),
        row("unrealizable", r.unrealizable),
        row("comparisons", r.comparisons),
        row("divergences", r.divergences),
    ];
    if let Some(d) = &r.first {
        rows.push(row("first divergence", format_coords(&d.coords)));
        if let Some(c) = d.curve {
            rows.push(row("curve", c));
        }
        let show = |x: &Result<i64, String>| match x {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        rows.push(row("formula", show(&d.formula)));
        rows.push(row("oracle", show(&d.oracle)));
        if let Some(t) = &d.triangle {
            rows.push(row("triangle", t));
        }
        if let Some(p) = &d.profile {
            rows.extend(profile_rows(p));
        }
    }
    table(&rows)
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let json = cli.json;
    let out = match &cli.command {
        Command::Invert(input) => cmd_invert(input, json)?,
        Command::Coordinatize(input) => cmd_coordinatize(input, json)?,
        Command::Profile { input, large } => cmd_profile(input, large.as_deref(), json)?,
        Command::Intersect { input, curve, .. } => cmd_intersect(input, curve.as_deref(), json)?,
        Command::Render { input, output } => cmd_render(input, output.as_ref())?,
        Command::Selftest { n, bound } => {
            let report = selftest(*n, *bound)?;
            let text = if json {
                to_json(&report)
            } else {
                selftest_text(&report)
            };
            return Ok((text, report.divergences == 0));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok((out, ok)) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("kncurves: formulas and oracle disagree");
                ExitCode::from(2)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("kncurves: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Inconsistent(msg)) => {
            eprintln!("kncurves: internal inconsistency: {msg}");
            ExitCode::from(2)
        }
    }
}
