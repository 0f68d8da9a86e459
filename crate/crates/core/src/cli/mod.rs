//! The `graded-poisson` command line.
//!
//! Exit status: 0 when everything checked passes, 1 on a computed mismatch
//! (`catalog verify`, `verify-aut`, `selftest`), 2 on usage or input errors.

mod report;
pub mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog::{verify_all, Catalog, Status};
use crate::complexes::{
    default_max_degree, koszul_dims, ozone_vs_hamiltonian, ph_dims, sealed_k1_dims, vacancy_check,
};
use crate::error::{Error, Result};
use crate::hilbert::{closed_form_ph, expand_i64};
use crate::jacobian::{a_sing_series, gkdim};
use crate::poisson::{
    potential_degree, rgt, verify_automorphism, verify_quotient_automorphism, PoissonStructure,
};
use crate::polyring::{Field, Monomial, Polynomial, Weights};
use crate::textio::{format_poly, parse_map, parse_modulus, parse_poly, parse_weights};

pub use report::{Format, Grid, Report};

/// Overrides the default truncation bound `3n + 12`.
pub const MAX_DEGREE_ENV: &str = "GRADED_POISSON_MAX_DEGREE";

#[derive(Parser, Debug)]
#[command(name = "graded-poisson", version, about = "Exact computations for Poisson structures on k[x,y,z] given by a weighted homogeneous potential")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "table", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Ring {
    /// Degrees of x, y, z, e.g. `1,1,2`.
    #[arg(long)]
    pub weights: String,
    /// `Q`, or a monic integer polynomial in `s` defining Q[s]/(m), e.g. `s^2+1`.
    #[arg(long, default_value = "Q")]
    pub field: String,
}

#[derive(Args, Debug, Clone)]
pub struct PotentialArgs {
    #[command(flatten)]
    pub ring: Ring,
    /// The potential Ω, e.g. `z^2+x^3*y`.
    #[arg(long)]
    pub potential: String,
}

#[derive(Args, Debug, Clone)]
pub struct Truncated {
    #[command(flatten)]
    pub potential: PotentialArgs,
    /// Largest degree computed. Defaults to `$GRADED_POISSON_MAX_DEGREE`, then `3n+12`.
    #[arg(long, allow_negative_numbers = true)]
    pub max_degree: Option<i64>,
}

/// Either a potential or the three brackets of the generators.
#[derive(Args, Debug, Clone)]
pub struct StructureArgs {
    #[command(flatten)]
    pub ring: Ring,
    #[arg(long, conflicts_with_all = ["pxy", "pyz", "pzx"], required_unless_present_all = ["pxy", "pyz", "pzx"])]
    pub potential: Option<String>,
    /// `{x,y}`
    #[arg(long, requires_all = ["pyz", "pzx"])]
    pub pxy: Option<String>,
    /// `{y,z}`
    #[arg(long)]
    pub pyz: Option<String>,
    /// `{z,x}`
    #[arg(long)]
    pub pzx: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The bracket {f,g}.
    Bracket {
        #[command(flatten)]
        structure: StructureArgs,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// The Jacobiator of the structure; zero iff it is Poisson.
    Jacobi {
        #[command(flatten)]
        structure: StructureArgs,
    },
    /// The modular derivation; zero iff the structure is unimodular.
    Modular {
        #[command(flatten)]
        structure: StructureArgs,
    },
    /// rgt: minus the dimension of degree-zero derivations killing Ω with zero divergence.
    Rgt(PotentialArgs),
    /// GK dimension of A/(Ω_x, Ω_y, Ω_z).
    Gkdim(PotentialArgs),
    /// Whether Ω has an isolated singularity.
    Singularity(PotentialArgs),
    /// Dimensions of Poisson cohomology PH^0..PH^3 per degree.
    Cohomology(Truncated),
    /// Homology of the Koszul complex on the partials of Ω.
    Koszul(Truncated),
    /// Sealed first Koszul homology per degree.
    Sealed(Truncated),
    /// Upper second Poisson cohomology per degree.
    Vacancy(Truncated),
    /// Ozone against Hamiltonian derivations per degree.
    Ozone(Truncated),
    /// Checks that a generator map preserves the bracket.
    VerifyAut {
        #[command(flatten)]
        potential: PotentialArgs,
        /// `x->...; y->...; z->...`
        #[arg(long)]
        map: String,
        /// Claimed inverse, in the same syntax.
        #[arg(long)]
        inverse: Option<String>,
        /// Work on A/(Ω - xi) instead of A; requires --inverse.
        #[arg(long, requires = "inverse", allow_hyphen_values = true)]
        xi: Option<String>,
    },
    /// The classification catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Seeded randomized property suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Run one suite only.
        #[arg(long)]
        suite: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    /// Recompute every recorded invariant and compare.
    Verify {
        /// `table:KEY`, `type:LABEL`, `weights:a,b,c` or `id:ID`; repeat to intersect.
        #[arg(long)]
        filter: Vec<String>,
        /// Fixed truncation bound for every entry (default `3n+12` per entry).
        #[arg(long, allow_negative_numbers = true)]
        max_degree: Option<i64>,
        /// Catalog file to use instead of the built-in one.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// List entries.
    List {
        #[arg(long)]
        filter: Vec<String>,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name), runs the command and writes
/// its report. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(&cli).and_then(|r| r.write(cli.format, out).map(|_| r.status)) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Bracket { structure, f, g } => bracket(structure, f, g),
        Command::Jacobi { structure } => jacobi(structure),
        Command::Modular { structure } => modular(structure),
        Command::Rgt(p) => scalar_command("rgt", p, |omega, r| {
            let v = rgt(omega)?;
            r.result("rgt", v).result("rigid", v == 0);
            Ok(())
        }),
        Command::Gkdim(p) => scalar_command("gkdim", p, |omega, r| {
            r.result("gkdim", gkdim(omega)?).result("a_sing_series", a_sing_series(omega)?.to_string());
            Ok(())
        }),
        Command::Singularity(p) => scalar_command("singularity", p, |omega, r| {
            let gk = gkdim(omega)?;
            r.result("isolated", gk == 0).result("gkdim", gk);
            Ok(())
        }),
        Command::Cohomology(t) => cohomology(t),
        Command::Koszul(t) => koszul(t),
        Command::Sealed(t) => sealed(t),
        Command::Vacancy(t) => vacancy(t),
        Command::Ozone(t) => ozone(t),
        Command::VerifyAut { potential, map, inverse, xi } => verify_aut(potential, map, inverse.as_deref(), xi.as_deref()),
        Command::Catalog { action } => catalog(action, cli.format),
        Command::Selftest { seed, cases, suite } => selftest_command(*seed, *cases, suite.as_deref()),
    }
}

pub fn parse_field(spec: &str) -> Result<Field> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("q") {
        Ok(Field::rationals())
    } else {
        Field::extension_big(parse_modulus(spec)?)
    }
}

impl Ring {
    fn resolve(&self) -> Result<(Weights, Field)> {
        Ok((parse_weights(&self.weights)?, parse_field(&self.field)?))
    }

    fn echo(&self, r: &mut Report) {
        r.input("weights", self.weights.trim()).input("field", self.field.trim());
    }
}

impl PotentialArgs {
    fn resolve(&self, r: &mut Report) -> Result<Polynomial> {
        let (w, k) = self.ring.resolve()?;
        self.ring.echo(r);
        let omega = parse_poly(&self.potential, w, &k)?;
        r.input("potential", format_poly(&omega));
        Ok(omega)
    }
}

impl Truncated {
    fn resolve(&self, r: &mut Report) -> Result<(Polynomial, i64)> {
        let omega = self.potential.resolve(r)?;
        let bound = max_degree(self.max_degree, potential_degree(&omega)?)?;
        r.truncation_bound = Some(bound);
        Ok((omega, bound))
    }
}

/// Flag, then environment, then `3n + 12`.
fn max_degree(flag: Option<i64>, n: i64) -> Result<i64> {
    let d = match flag {
        Some(d) => d,
        None => match std::env::var(MAX_DEGREE_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("{MAX_DEGREE_ENV}=`{v}` is not an integer")))?,
            Err(_) => default_max_degree(n),
        },
    };
    if d < 0 {
        return Err(Error::Config(format!("max degree must be >= 0, got {d}")));
    }
    Ok(d)
}

impl StructureArgs {
    fn resolve(&self, r: &mut Report) -> Result<PoissonStructure> {
        let (w, k) = self.ring.resolve()?;
        self.ring.echo(r);
        if let Some(p) = &self.potential {
            let omega = parse_poly(p, w, &k)?;
            r.input("potential", format_poly(&omega));
            return PoissonStructure::from_potential(&omega);
        }
        let mut parts = Vec::new();
        for (key, text) in [("pxy", &self.pxy), ("pyz", &self.pyz), ("pzx", &self.pzx)] {
            let text = text.as_ref().ok_or_else(|| Error::Config(format!("--{key} is required")))?;
            let p = parse_poly(text, w, &k)?;
            r.input(key, format_poly(&p));
            parts.push(p);
        }
        let [pxy, pyz, pzx]: [Polynomial; 3] = parts.try_into().expect("three brackets");
        PoissonStructure::new(pxy, pyz, pzx)
    }
}

fn scalar_command(
    name: &str,
    p: &PotentialArgs,
    body: impl FnOnce(&Polynomial, &mut Report) -> Result<()>,
) -> Result<Report> {
    let mut r = Report::new(name);
    let omega = p.resolve(&mut r)?;
    body(&omega, &mut r)?;
    Ok(r)
}

fn bracket(s: &StructureArgs, f: &str, g: &str) -> Result<Report> {
    let mut r = Report::new("bracket");
    let pi = s.resolve(&mut r)?;
    let f = parse_poly(f, *pi.weights(), pi.field())?;
    let g = parse_poly(g, *pi.weights(), pi.field())?;
    r.input("f", format_poly(&f)).input("g", format_poly(&g));
    r.result("bracket", format_poly(&pi.bracket(&f, &g)));
    Ok(r)
}

fn jacobi(s: &StructureArgs) -> Result<Report> {
    let mut r = Report::new("jacobi");
    let pi = s.resolve(&mut r)?;
    let j = pi.jacobiator();
    r.result("jacobiator", format_poly(&j)).result("is_poisson", j.is_zero());
    Ok(r)
}

fn modular(s: &StructureArgs) -> Result<Report> {
    let mut r = Report::new("modular");
    let pi = s.resolve(&mut r)?;
    let m = pi.modular_derivation();
    let images: Vec<Value> = m.vector().0.iter().map(|p| Value::from(format_poly(p))).collect();
    r.result("modular_derivation", images).result("unimodular", m.is_zero());
    Ok(r)
}

fn cohomology(t: &Truncated) -> Result<Report> {
    let mut r = Report::new("cohomology");
    let (omega, bound) = t.resolve(&mut r)?;
    let w = *omega.weights();
    let ph = ph_dims(&omega, bound)?;
    // The closed forms are stated for potentials of degree a+b+c.
    let closed = if potential_degree(&omega)? == w.total() {
        Some((0..4).map(|i| Ok(expand_i64(&closed_form_ph(&w, i)?, ph.min_degree, ph.max_degree))).collect::<Result<Vec<_>>>()?)
    } else {
        None
    };
    let mut columns = vec!["degree", "PH0", "PH1", "PH2", "PH3"];
    if closed.is_some() {
        columns.extend(["CF0", "CF1", "CF2", "CF3"]);
    }
    let mut grid = Grid::new(&columns);
    for (at, d) in ph.degrees().enumerate() {
        let mut row: Vec<Value> = vec![d.into()];
        row.extend((0..4).map(|i| Value::from(ph.get(i, d))));
        if let Some(cf) = &closed {
            row.extend(cf.iter().map(|series| Value::from(series[at])));
        }
        grid.push(row);
    }
    r.result("min_degree", ph.min_degree);
    match &closed {
        Some(cf) => {
            let agree: Vec<Value> = (0..4)
                .map(|i| Value::from(ph.degrees().zip(&cf[i]).all(|(d, &v)| ph.get(i, d) as i64 == v)))
                .collect();
            r.result("closed_form_agrees", agree);
        }
        None => {
            r.result("closed_form_agrees", Value::Null);
        }
    }
    r.table = Some(grid);
    Ok(r)
}

fn koszul(t: &Truncated) -> Result<Report> {
    let mut r = Report::new("koszul");
    let (omega, bound) = t.resolve(&mut r)?;
    let table = koszul_dims(&omega, bound)?;
    let mut grid = Grid::new(&["degree", "H0", "H1", "H2", "H3"]);
    for d in table.degrees() {
        let mut row: Vec<Value> = vec![d.into()];
        row.extend((0..4).map(|i| Value::from(table.get(i, d))));
        grid.push(row);
    }
    r.table = Some(grid);
    Ok(r)
}

fn sealed(t: &Truncated) -> Result<Report> {
    let mut r = Report::new("sealed");
    let (omega, bound) = t.resolve(&mut r)?;
    let rep = sealed_k1_dims(&omega, bound)?;
    let mut grid = Grid::new(&["degree", "cycles", "sealed_cycles", "boundaries", "sK1"]);
    for (d, (c, s, b, k)) in &rep.degrees {
        grid.push(vec![(*d).into(), (*c).into(), (*s).into(), (*b).into(), (*k).into()]);
    }
    r.result("sealed_up_to_bound", rep.sealed());
    r.table = Some(grid);
    Ok(r)
}

fn vacancy(t: &Truncated) -> Result<Report> {
    let mut r = Report::new("vacancy");
    let (omega, bound) = t.resolve(&mut r)?;
    let rep = vacancy_check(&omega, bound)?;
    let mut grid = Grid::new(&["degree", "ker_d2", "M2", "uPH2"]);
    for (d, (k, m, u)) in &rep.degrees {
        grid.push(vec![(*d).into(), (*k).into(), (*m).into(), (*u).into()]);
    }
    r.result("vacant_up_to_bound", rep.vacant()).result("nonzero_degrees", rep.nonzero_degrees());
    r.table = Some(grid);
    Ok(r)
}

fn ozone(t: &Truncated) -> Result<Report> {
    let mut r = Report::new("ozone");
    let (omega, bound) = t.resolve(&mut r)?;
    let rep = ozone_vs_hamiltonian(&omega, bound)?;
    let mut grid = Grid::new(&["degree", "ozone", "hamiltonian"]);
    for (d, (o, h)) in &rep.degrees {
        grid.push(vec![(*d).into(), (*o).into(), (*h).into()]);
    }
    r.result("h_ozone_up_to_bound", rep.h_ozone()).result("discrepancies", rep.discrepancies());
    r.table = Some(grid);
    Ok(r)
}

fn verify_aut(p: &PotentialArgs, map: &str, inverse: Option<&str>, xi: Option<&str>) -> Result<Report> {
    let mut r = Report::new("verify-aut");
    let omega = p.resolve(&mut r)?;
    let (w, k) = (*omega.weights(), omega.field().clone());
    let phi = parse_map(map, w, &k)?;
    r.input("map", map_text(&phi));
    let psi = inverse.map(|t| parse_map(t, w, &k)).transpose()?;
    if let Some(psi) = &psi {
        r.input("inverse", map_text(psi));
    }
    let holds = match xi {
        Some(text) => {
            let c = parse_poly(text, w, &k)?;
            if !c.is_constant() {
                return Err(Error::Config(format!("--xi must be a constant, got `{text}`")));
            }
            r.input("xi", format_poly(&c));
            let psi = psi.expect("clap requires --inverse with --xi");
            let rep = verify_quotient_automorphism(&omega, &c.coeff(&Monomial::default()), &phi, &psi)?;
            r.result("preserves_ideal", rep.preserves_ideal)
                .result("preserves_bracket", rep.preserves_bracket)
                .result("inverse_ok", rep.inverse_ok);
            rep.holds()
        }
        None => {
            let rep = verify_automorphism(&omega, &phi)?;
            r.result("determinant", format_poly(&rep.determinant)).result("image", format_poly(&rep.image));
            r.result("image_equals_det_times_potential", rep.holds);
            let mut ok = rep.holds;
            if let Some(psi) = &psi {
                let gens: Vec<Polynomial> = (0..3).map(|v| Polynomial::var(w, k.clone(), v)).collect();
                let mut round = true;
                for v in 0..3 {
                    round &= psi[v].compose(&phi)? == gens[v];
                }
                r.result("inverse_ok", round);
                ok &= round;
            }
            ok
        }
    };
    r.result("holds", holds);
    r.status = if holds { 0 } else { 1 };
    Ok(r)
}

fn map_text(m: &[Polynomial; 3]) -> String {
    format!("x->{}; y->{}; z->{}", format_poly(&m[0]), format_poly(&m[1]), format_poly(&m[2]))
}

fn load_catalog(path: &Option<PathBuf>) -> Result<Catalog> {
    match path {
        Some(p) => Catalog::load(p),
        None => Ok(Catalog::builtin()),
    }
}

fn catalog(action: &CatalogAction, format: Format) -> Result<Report> {
    match action {
        CatalogAction::List { filter, catalog } => {
            let cat = load_catalog(catalog)?;
            let filters: Vec<&str> = filter.iter().map(String::as_str).collect();
            let mut r = Report::new("catalog list");
            r.input("filter", filter.clone());
            let mut grid = Grid::new(&["id", "weights", "omega", "type", "rgt", "gk", "vacant", "sealed", "isolated", "notes"]);
            for e in cat.entries(&filters)? {
                let mut notes: Vec<String> = e.conditions.iter().map(|c| format!("when:{c}")).collect();
                notes.extend(e.notes.iter().cloned());
                grid.push(vec![
                    e.id.clone().into(),
                    e.weights.to_string().into(),
                    e.omega_text.clone().into(),
                    e.kind.label().into(),
                    e.rgt.to_string().into(),
                    e.gk.to_string().into(),
                    e.vacant.to_string().into(),
                    e.sealed.to_string().into(),
                    e.isolated.into(),
                    notes.join("; ").into(),
                ]);
            }
            r.result("entries", grid.rows.len());
            r.table = Some(grid);
            Ok(r)
        }
        CatalogAction::Verify { filter, max_degree: bound, catalog } => {
            if let Some(d) = bound {
                if *d < 0 {
                    return Err(Error::Config(format!("max degree must be >= 0, got {d}")));
                }
            }
            let cat = load_catalog(catalog)?;
            let filters: Vec<&str> = filter.iter().map(String::as_str).collect();
            let selected = cat.entries(&filters)?;
            let bound = match bound {
                Some(d) => Some(*d),
                None => std::env::var(MAX_DEGREE_ENV).ok().map(|_| max_degree(None, 0)).transpose()?,
            };
            let report = verify_all(&selected, bound);
            let mut r = Report::new("catalog verify");
            r.input("filter", filter.clone());
            r.input("max_degree", bound.map(Value::from).unwrap_or_else(|| "3n+12".into()));
            r.truncation_bound = bound;
            r.result("entries", report.entries.len())
                .result("checks_passed", report.passed)
                .result("checks_failed", report.failed)
                .result("checks_info", report.info)
                .result("mismatched_entries", report.mismatches());
            let mut summary = Grid::new(&["id", "weights", "type", "omega", "D", "result", "failed"]);
            let mut detail = Grid::new(&["id", "check", "status", "expected", "computed"]);
            for e in &report.entries {
                let failed: Vec<&str> = e.failures().map(|c| c.name).collect();
                summary.push(vec![
                    e.id.clone().into(),
                    e.weights.clone().into(),
                    e.kind.clone().into(),
                    e.omega.clone().into(),
                    e.max_degree.into(),
                    (if e.passed() { "pass" } else { "FAIL" }).into(),
                    failed.join(",").into(),
                ]);
                for c in &e.checks {
                    // the text table only lists what needs attention
                    if format == Format::Table && c.status == Status::Pass {
                        continue;
                    }
                    detail.push(vec![
                        e.id.clone().into(),
                        c.name.into(),
                        c.status.to_string().into(),
                        c.expected.clone().into(),
                        c.computed.clone().into(),
                    ]);
                }
            }
            if format == Format::Json {
                r.result("report", serde_json::to_value(&report).expect("serializable"));
            } else {
                r.table = Some(summary);
                r.detail = Some(detail);
            }
            r.status = if report.ok() { 0 } else { 1 };
            Ok(r)
        }
    }
}

fn selftest_command(seed: u64, cases: usize, suite: Option<&str>) -> Result<Report> {
    let results = match suite {
        Some(s) => vec![selftest::run_suite(s, seed, cases)?],
        None => selftest::run_all(seed, cases),
    };
    let mut r = Report::new("selftest");
    r.input("seed", seed).input("cases", cases);
    let mut grid = Grid::new(&["suite", "cases", "failures", "result"]);
    let mut all = true;
    for s in &results {
        all &= s.passed();
        grid.push(vec![
            s.suite.clone().into(),
            s.cases.into(),
            s.failures.len().into(),
            (if s.passed() { "pass" } else { "FAIL" }).into(),
        ]);
    }
    let failures: Vec<Value> = results.iter().flat_map(|s| s.failures.iter().map(|f| json!(format!("{}: {f}", s.suite)))).collect();
    r.result("passed", all).result("failures", failures);
    r.table = Some(grid);
    r.status = if all { 0 } else { 1 };
    Ok(r)
}
