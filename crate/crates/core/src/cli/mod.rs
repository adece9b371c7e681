//! Command-line front end. Every command prints one JSON report
//! `{"command", "input", "result", "diagnostics"}`; keys are sorted so the
//! output is byte-stable. Exit codes: 0 success, 1 domain error, 2 usage
//! or parse error.

pub mod experiments;
pub mod spec;

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::algebra::{Field, Scalar};
use crate::dynamics::{
    conjugacy_test, critical_points, dynatomic, dynatomic_degree, multiplier_spectrum, orbit, pcf_check, OrbitResult,
    PcfResult, ProjPoint, RationalMap,
};
use crate::error::{Error, Result};
use crate::families::{
    isospectral_check, lattes_from_curve, lattes_isospectral_probe, triviality_probe, EllipticCurve, Family,
    Isospectrality, Triviality,
};
use crate::limits::Limits;
use crate::rootfind::{
    convergence_probe, fixed_point_sum_check, newton_map, residue_obstruction, FixedPointSum, Obstruction,
    ProbeVerdict,
};
use crate::valuation::{
    classify_spectrum, convention_self_test, newton_polygon, reduce_at_place, tame_check, Place, TameResult,
};
use spec::{parse_ints, parse_lattes_spec, parse_list, parse_map_spec, parse_point, parse_poly};

#[derive(Parser, Debug)]
#[command(name = "isospec", version, about = "Multiplier spectra of rational maps over finite and function fields")]
struct Cli {
    /// Cap on exhaustively enumerated field sizes.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include wall-clock timing (makes output non-deterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args, Debug)]
struct MapArg {
    /// Map spec, or `-` to read it from stdin.
    #[arg(long)]
    map: String,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Multiplier polynomial M_n and its symmetric functions.
    Spectrum {
        #[command(flatten)]
        map: MapArg,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Dynatomic form Φ_n.
    Dynatomic {
        #[command(flatten)]
        map: MapArg,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    Critical {
        #[command(flatten)]
        map: MapArg,
        #[arg(long, default_value_t = 2)]
        max_ext: u32,
    },
    Orbit {
        #[command(flatten)]
        map: MapArg,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = 100)]
        bound: usize,
    },
    Pcf {
        #[command(flatten)]
        map: MapArg,
        #[arg(long, default_value_t = 100)]
        bound: usize,
        #[arg(long, default_value_t = 2)]
        max_ext: u32,
    },
    /// Searches PGL_2(GF(q^j)) for a conjugacy from --map to --map2.
    Conjugate {
        #[command(flatten)]
        map: MapArg,
        #[arg(long)]
        map2: String,
        #[arg(long, default_value_t = 2)]
        max_ext: u32,
    },
    Tame {
        #[command(flatten)]
        map: MapArg,
        #[arg(long)]
        place: String,
        #[arg(long, default_value_t = 2)]
        max_ext: u32,
    },
    Reduce {
        #[command(flatten)]
        map: MapArg,
        #[arg(long)]
        place: String,
    },
    /// Newton polygon of --poly over --field at --place, or the convention
    /// self-test.
    Polygon {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "self_test")]
        poly: Option<String>,
        #[arg(long, required_unless_present = "self_test")]
        field: Option<String>,
        #[arg(long, required_unless_present = "self_test")]
        place: Option<String>,
        #[arg(long)]
        self_test: bool,
    },
    /// Attracting, indifferent and repelling period-n multipliers.
    Classify {
        #[command(flatten)]
        map: MapArg,
        #[arg(long)]
        place: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Whether every Λ_n, n <= N, of a GF(q)(t) family is constant in t.
    FamilyIso {
        #[command(flatten)]
        map: MapArg,
        #[arg(long = "N", default_value_t = 3)]
        max_n: usize,
    },
    Lattes {
        /// `lattes A=<expr> B=<expr> m=2 over <field>`.
        #[arg(long)]
        spec: String,
        #[arg(long = "N", default_value_t = 2)]
        max_n: usize,
    },
    /// Conjugacy of specializations of a family.
    Trivial {
        #[command(flatten)]
        map: MapArg,
        #[arg(long)]
        values: String,
        #[arg(long, default_value_t = 2)]
        max_ext: u32,
    },
    #[command(subcommand)]
    Rootfind(RootCmd),
    #[command(subcommand)]
    Experiment(ExperimentCmd),
}

#[derive(Subcommand, Debug)]
enum RootCmd {
    Obstruct {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
    },
    Newton {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        field: String,
    },
    Probe {
        #[command(flatten)]
        map: MapArg,
        #[arg(long)]
        place: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        seeds: String,
        #[arg(long, default_value_t = 20)]
        iters: usize,
    },
    /// The fixed-point identity sum 1/(1 - λ) = 1.
    Sum {
        #[command(flatten)]
        map: MapArg,
    },
}

#[derive(Subcommand, Debug)]
enum ExperimentCmd {
    Milnor {
        #[arg(long, default_value_t = 5)]
        q: u64,
    },
    Counterexample {
        #[arg(long, default_value_t = 9)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        a: i64,
        #[arg(long, default_value_t = 1)]
        max_ext: u32,
    },
    Plane {
        #[arg(long, default_value_t = 11)]
        q: u64,
        #[arg(long, default_value_t = 60)]
        samples: usize,
        #[arg(long, default_value_t = 11)]
        seed: u64,
    },
}

/// The finished report and its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub json: String,
}

/// Runs one command. `args` excludes the program name; `stdin` is read only
/// for `--map -`.
pub fn run_command(args: &[String], stdin: &mut dyn Read) -> Outcome {
    let started = Instant::now();
    let mut argv = vec!["isospec".to_string()];
    argv.extend(args.iter().cloned());
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                return Outcome {
                    code: 0,
                    json: finish(&json!(null), args, Map::new(), Ok(json!({ "text": e.to_string() })), None),
                };
            }
            let err = Error::Usage(e.kind().to_string());
            return Outcome {
                code: 2,
                json: finish(&json!(null), args, Map::new(), Err(err), None),
            };
        }
    };
    let mut limits = Limits::default();
    if let Some(b) = cli.budget {
        limits.enumeration = b;
    }
    let mut ctx = Ctx {
        input: Map::new(),
        stdin,
        limits,
    };
    let verb = verb(&cli.cmd);
    let result = dispatch(&cli.cmd, &mut ctx);
    let code = match &result {
        Ok(_) => 0,
        Err(e) => e.exit_code(),
    };
    let timing = cli.timing.then(|| started.elapsed().as_millis());
    let mut input = ctx.input;
    input.insert("budget".into(), json!(ctx.limits.enumeration));
    let text = finish(&json!(verb), args, input, result, timing);
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            let err = Error::Usage(format!("cannot write {}: {e}", path.display()));
            return Outcome {
                code: 2,
                json: finish(&json!(verb), args, Map::new(), Err(err), None),
            };
        }
    }
    Outcome { code, json: text }
}

fn finish(verb: &Value, args: &[String], mut input: Map<String, Value>, result: Result<Value>, timing: Option<u128>) -> String {
    input.insert("argv".into(), json!(args));
    let mut diagnostics = Map::new();
    diagnostics.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    if let Some(ms) = timing {
        diagnostics.insert("timing_ms".into(), json!(ms));
    }
    let result = match result {
        Ok(v) => v,
        Err(e) => {
            diagnostics.insert(
                "error".into(),
                json!({ "kind": e.kind(), "message": e.to_string(), "exit_code": e.exit_code() }),
            );
            Value::Null
        }
    };
    let report = json!({
        "command": verb,
        "input": input,
        "result": result,
        "diagnostics": diagnostics,
    });
    serde_json::to_string_pretty(&report).expect("serializable") + "\n"
}

fn verb(cmd: &Cmd) -> String {
    match cmd {
        Cmd::Spectrum { .. } => "spectrum".into(),
        Cmd::Dynatomic { .. } => "dynatomic".into(),
        Cmd::Critical { .. } => "critical".into(),
        Cmd::Orbit { .. } => "orbit".into(),
        Cmd::Pcf { .. } => "pcf".into(),
        Cmd::Conjugate { .. } => "conjugate".into(),
        Cmd::Tame { .. } => "tame".into(),
        Cmd::Reduce { .. } => "reduce".into(),
        Cmd::Polygon { .. } => "polygon".into(),
        Cmd::Classify { .. } => "classify".into(),
        Cmd::FamilyIso { .. } => "family-iso".into(),
        Cmd::Lattes { .. } => "lattes".into(),
        Cmd::Trivial { .. } => "trivial".into(),
        Cmd::Rootfind(r) => match r {
            RootCmd::Obstruct { .. } => "rootfind-obstruct".into(),
            RootCmd::Newton { .. } => "rootfind-newton".into(),
            RootCmd::Probe { .. } => "rootfind-probe".into(),
            RootCmd::Sum { .. } => "rootfind-sum".into(),
        },
        Cmd::Experiment(e) => match e {
            ExperimentCmd::Milnor { .. } => "experiment-milnor".into(),
            ExperimentCmd::Counterexample { .. } => "experiment-counterexample".into(),
            ExperimentCmd::Plane { .. } => "experiment-plane".into(),
        },
    }
}

struct Ctx<'a> {
    input: Map<String, Value>,
    stdin: &'a mut dyn Read,
    limits: Limits,
}

impl Ctx<'_> {
    fn map(&mut self, key: &str, text: &str) -> Result<RationalMap> {
        let text = if text == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Usage(format!("reading stdin: {e}")))?;
            s
        } else {
            text.to_string()
        };
        let m = parse_map_spec(text.trim())?;
        self.input.insert(key.into(), json!(m.spec()));
        Ok(m)
    }

    fn place(&mut self, text: &str) -> Result<Place> {
        let p = Place::parse(text)?;
        self.input.insert("place".into(), json!(p.spec()));
        Ok(p)
    }
}

fn fmt_all(f: &Field, v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| f.format(s)).collect()
}

fn point_str(f: &Field, p: &ProjPoint) -> String {
    p.format(f)
}

fn dispatch(cmd: &Cmd, ctx: &mut Ctx) -> Result<Value> {
    let limits = ctx.limits.clone();
    let l = &limits;
    match cmd {
        Cmd::Spectrum { map, n } => {
            let phi = ctx.map("map", &map.map)?;
            let m = multiplier_spectrum(&phi, *n, l)?;
            let f = phi.field();
            let mut out = Map::new();
            out.insert(format!("M{n}"), json!(m.poly.pretty("T")));
            out.insert("coefficients".into(), json!(m.poly.to_list()));
            out.insert("lambda".into(), json!(fmt_all(f, &m.sigma)));
            out.insert("count".into(), json!(m.count));
            out.insert("n".into(), json!(n));
            Ok(Value::Object(out))
        }
        Cmd::Dynatomic { map, n } => {
            let phi = ctx.map("map", &map.map)?;
            let form = dynatomic(&phi, *n, l)?;
            Ok(json!({
                "n": n,
                "degree": form.degree(),
                "expected_degree": dynatomic_degree(phi.degree(), *n),
                "affine": form.poly().pretty("z"),
                "coefficients": form.poly().to_list(),
            }))
        }
        Cmd::Critical { map, max_ext } => {
            let phi = ctx.map("map", &map.map)?;
            let cps = critical_points(&phi, *max_ext, l)?;
            let list: Vec<Value> = cps
                .iter()
                .map(|c| {
                    json!({
                        "point": point_str(&c.field, &c.point),
                        "field": c.field.spec(),
                        "degree": c.degree,
                        "multiplicity": c.multiplicity,
                    })
                })
                .collect();
            Ok(json!({ "count": cps.iter().map(|c| c.multiplicity).sum::<usize>(), "points": list }))
        }
        Cmd::Orbit { map, point, bound } => {
            let phi = ctx.map("map", &map.map)?;
            let z = parse_point(phi.field(), point)?;
            Ok(orbit_json(phi.field(), &orbit(&phi, &z, *bound)))
        }
        Cmd::Pcf { map, bound, max_ext } => {
            let phi = ctx.map("map", &map.map)?;
            Ok(match pcf_check(&phi, *bound, *max_ext, l)? {
                PcfResult::Pcf(orbits) => json!({
                    "verdict": "Pcf",
                    "orbits": orbits.iter().map(|o| json!({
                        "critical": point_str(&o.critical.field, &o.critical.point),
                        "field": o.critical.field.spec(),
                        "tail": o.tail,
                        "cycle": o.cycle,
                    })).collect::<Vec<_>>(),
                }),
                PcfResult::NotPcfWithinBound {
                    closed,
                    open,
                    unresolved,
                } => json!({
                    "verdict": "NotPcfWithinBound",
                    "closed": closed.len(),
                    "open": open.iter().map(|c| point_str(&c.field, &c.point)).collect::<Vec<_>>(),
                    "unresolved": unresolved,
                }),
                PcfResult::Wild => json!({ "verdict": "Wild" }),
            })
        }
        Cmd::Conjugate { map, map2, max_ext } => {
            let phi = ctx.map("map", &map.map)?;
            let psi = ctx.map("map2", map2)?;
            Ok(match conjugacy_test(&phi, &psi, *max_ext, l)? {
                Some(a) => json!({
                    "conjugate": true,
                    "transform": a.format(),
                    "field": a.field().spec(),
                }),
                None => json!({ "conjugate": false, "max_ext": max_ext }),
            })
        }
        Cmd::Tame { map, place, max_ext } => {
            let phi = ctx.map("map", &map.map)?;
            let place = ctx.place(place)?;
            Ok(match tame_check(&phi, &place, *max_ext, l)? {
                TameResult::TameByDegree => json!({ "verdict": "TameByDegree" }),
                TameResult::Tame { model } => json!({ "verdict": "Tame", "model": model.spec() }),
                TameResult::Wild {
                    field,
                    point,
                    e,
                    reason,
                } => json!({
                    "verdict": "Wild",
                    "witness": { "point": point.format(&field), "field": field.spec(), "e": e },
                    "reason": reason,
                }),
            })
        }
        Cmd::Reduce { map, place } => {
            let phi = ctx.map("map", &map.map)?;
            let place = ctx.place(place)?;
            let r = reduce_at_place(&phi, &place)?;
            let rf = r.num.field().clone();
            Ok(json!({
                "num": r.num.poly().to_list(),
                "den": r.den.poly().to_list(),
                "residue_field": rf.spec(),
                "degree": r.degree,
                "degree_drop": r.degree_drop,
                "good_reduction": !r.degree_drop,
                "map": r.map.as_ref().map(|m| m.spec()),
            }))
        }
        Cmd::Polygon {
            poly,
            field,
            place,
            self_test,
        } => {
            if *self_test {
                return Ok(json!({ "self_test": convention_self_test() }));
            }
            let field = Field::parse_spec(field.as_deref().unwrap_or_default())?;
            let f = parse_poly(&field, poly.as_deref().unwrap_or_default())?;
            ctx.input.insert("poly".into(), json!(f.to_list()));
            ctx.input.insert("field".into(), json!(field.spec()));
            let place = ctx.place(place.as_deref().unwrap_or_default())?;
            let np = newton_polygon(&f, &place)?;
            Ok(json!({
                "vertices": np.vertices.iter().map(|(i, v)| json!([i, v])).collect::<Vec<_>>(),
                "segments": np.segments.iter().map(|s| json!({ "slope": s.slope.to_string(), "length": s.length })).collect::<Vec<_>>(),
                "zero_roots": np.ord0,
                "root_valuations": np.root_valuations().iter().map(|(v, m)| json!({ "valuation": v.to_string(), "multiplicity": m })).collect::<Vec<_>>(),
            }))
        }
        Cmd::Classify { map, place, n } => {
            let phi = ctx.map("map", &map.map)?;
            let place = ctx.place(place)?;
            let m = multiplier_spectrum(&phi, *n, l)?;
            let c = classify_spectrum(&m, &place)?;
            Ok(json!({
                "n": n,
                "attracting": c.attracting,
                "indifferent": c.indifferent,
                "repelling": c.repelling,
                "by_valuation": c.by_valuation.iter().map(|(v, k)| json!({ "valuation": v.map_or("inf".to_string(), |v| v.to_string()), "count": k })).collect::<Vec<_>>(),
            }))
        }
        Cmd::FamilyIso { map, max_n } => {
            let phi = ctx.map("map", &map.map)?;
            let fam = Family::new(phi)?;
            Ok(iso_json(fam.map().field(), &isospectral_check(&fam, *max_n, l)?))
        }
        Cmd::Lattes { spec, max_n } => {
            let s = parse_lattes_spec(spec)?;
            ctx.input.insert("spec".into(), json!(s.spec()));
            let f = &s.field;
            let e = EllipticCurve::new(f, s.a.clone(), s.b.clone())?;
            let phi = lattes_from_curve(&e, s.m, false)?;
            let probe = lattes_isospectral_probe(f, s.a.clone(), s.b.clone(), *max_n, l)?;
            Ok(json!({
                "map": phi.spec(),
                "j_invariant": f.format(&probe.j_invariant),
                "j_constant": probe.j_constant,
                "isospectrality": iso_json(f, &probe.result),
                "constant_coordinates": probe.constant_coordinates,
            }))
        }
        Cmd::Trivial { map, values, max_ext } => {
            let phi = ctx.map("map", &map.map)?;
            let fam = Family::new(phi)?;
            let base: Field = fam.constant_field().clone().into();
            let vals = parse_list(&base, values)?;
            Ok(match triviality_probe(&fam, &vals, *max_ext, l)? {
                Triviality::AllConjugate(ws) => json!({
                    "verdict": "AllConjugate",
                    "witnesses": ws.iter().map(|a| a.format()).collect::<Vec<_>>(),
                }),
                Triviality::Distinct(a, b) => json!({
                    "verdict": "Distinct",
                    "values": [base.format(&a), base.format(&b)],
                    "max_ext": max_ext,
                }),
            })
        }
        Cmd::Rootfind(r) => rootfind(r, ctx),
        Cmd::Experiment(e) => match e {
            ExperimentCmd::Milnor { q } => experiments::milnor(*q, l),
            ExperimentCmd::Counterexample { q, a, max_ext } => experiments::counterexample(*q, *a, *max_ext, l),
            ExperimentCmd::Plane { q, samples, seed } => experiments::plane(*q, *samples, *seed, l),
        },
    }
}

fn rootfind(cmd: &RootCmd, ctx: &mut Ctx) -> Result<Value> {
    let limits = ctx.limits.clone();
    match cmd {
        RootCmd::Obstruct { r, p, d } => Ok(match residue_obstruction(*r, *p, *d)? {
            Obstruction::Obstructed { reason, hypothesis } => json!({
                "verdict": "Obstructed",
                "reason": format!("{reason:?}"),
                "hypothesis": hypothesis,
            }),
            Obstruction::NotObstructedByTheseTests { failed } => json!({
                "verdict": "NotObstructedByTheseTests",
                "failed": failed,
            }),
        }),
        RootCmd::Newton { f, field } => {
            let field = Field::parse_spec(field)?;
            let f = parse_poly(&field, f)?;
            ctx.input.insert("f".into(), json!(f.to_list()));
            let n = newton_map(&f)?;
            Ok(json!({ "map": n.spec(), "degree": n.degree() }))
        }
        RootCmd::Probe {
            map,
            place,
            seeds,
            iters,
        } => {
            let phi = ctx.map("map", &map.map)?;
            let place = ctx.place(place)?;
            let seeds = parse_ints(seeds)?;
            let out = convergence_probe(&phi, &place, &seeds, *iters)?;
            Ok(json!({
                "trajectories": out.iter().map(|t| json!({
                    "seed": t.seed,
                    "valuations": t.valuations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "verdict": match t.verdict {
                        ProbeVerdict::Indeterminate(s) => json!({ "Indeterminate": s }),
                        ref v => json!(format!("{v:?}")),
                    },
                })).collect::<Vec<_>>(),
            }))
        }
        RootCmd::Sum { map } => {
            let phi = ctx.map("map", &map.map)?;
            Ok(match fixed_point_sum_check(&phi, &limits)? {
                FixedPointSum::HoldsExactly => json!({ "verdict": "HoldsExactly" }),
                FixedPointSum::MultiplierOne => json!({ "verdict": "MultiplierOne" }),
                FixedPointSum::Value(v) => json!({ "verdict": "Fails", "value": phi.field().format(&v) }),
            })
        }
    }
}

fn orbit_json(f: &Field, o: &OrbitResult) -> Value {
    match o {
        OrbitResult::Found { tail, cycle, points } => json!({
            "verdict": "Found",
            "tail": tail,
            "cycle": cycle,
            "points": points.iter().map(|p| point_str(f, p)).collect::<Vec<_>>(),
        }),
        OrbitResult::NotFoundWithinBound { steps } => json!({ "verdict": "NotFoundWithinBound", "steps": steps }),
    }
}

fn iso_json(f: &Field, r: &Isospectrality) -> Value {
    match r {
        Isospectrality::Isospectral { spectra } => json!({
            "verdict": "Isospectral",
            "spectra": spectra.iter().map(|m| json!({
                "n": m.period,
                "M": m.poly.pretty("T"),
                "lambda": fmt_all(f, &m.sigma),
            })).collect::<Vec<_>>(),
        }),
        Isospectrality::Witness { n, index, value } => json!({
            "verdict": "Witness",
            "n": n,
            "index": index,
            "value": f.format(value),
        }),
    }
}
