//! `sqg`: quiver Grassmannians of catenoid representations from the command line.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sqg::instance::{family, read_instance, InstanceSpec};
use sqg::report::Report;
use sqg::repcore::{
    decompose_simple, is_catenoid, is_simple, minimal_resolution, nonempty, Catenoid, Instance, Representation,
};
use sqg::schubert::{
    build_frame, cell_dimension, enumerate_fixed_points, hom_criterion_witness, is_irreducible, maximal_elements,
    parabolic_blocks, rank_criterion, subrep_type, weyl_word,
};
use sqg::verify::{verify, Property, VerifyConfig};
use sqg::{poincare, BigPoly, BigUint, Error, Guard, SubsetChain};

const EXIT_INPUT: u8 = 1;
const EXIT_NOT_CATENOID: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(name = "sqg", version, about = "Quiver Grassmannians of catenoid type-A representations")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Refuse enumerations predicted to exceed this many fixed points.
    #[arg(long, global = true, default_value_t = Guard::DEFAULT_LIMIT)]
    guard: u64,

    /// Use a built-in family (degflag or complexes) instead of an input file.
    #[arg(long, global = true, num_args = 2, value_names = ["NAME", "N"])]
    family: Option<Vec<String>>,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// Instance JSON file; standard input when omitted.
    path: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Cells,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Whether the summands form a chain.
    Catenoid(Input),
    /// Minimal projective resolution data q, r, f and N.
    Resolve(Input),
    /// Whether the quiver Grassmannian has a point.
    Nonempty(Input),
    /// Whether the instance is simple.
    Simple(Input),
    /// Split into a product of simple instances.
    Decompose(Input),
    /// Irreducibility criterion next to the enumerated component count.
    Irreducible(Input),
    /// Irreducible components as maximal fixed points.
    Components(Input),
    /// Weyl group element of a simple irreducible instance.
    Weyl(Input),
    /// All fixed points with their cell dimensions.
    FixedPoints(Input),
    /// Isomorphism type of the subrepresentation at each fixed point.
    SubrepTypes(Input),
    /// Poincaré polynomial in q (complex dimension grading).
    Poincare {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Euler characteristic.
    Euler(Input),
    /// Multiplicities of the distinct summands in chain order.
    Blocks(Input),
    /// Everything above in one record.
    Report(Input),
    /// Cross-check all properties over small instances.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_summands: usize,
        /// Also check a random sample beyond the exhaustive range.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::NotCatenoid(..) => EXIT_NOT_CATENOID,
            Error::GuardExceeded { .. } => EXIT_GUARD,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(cli: &Cli, input: &Input) -> Result<Instance, Failure> {
    if let Some(fam) = &cli.family {
        let n: usize = fam[1].parse().map_err(|_| Failure {
            code: EXIT_INPUT,
            message: format!("family size {:?} is not a positive integer", fam[1]),
        })?;
        return Ok(family(&fam[0], n)?);
    }
    let text = match &input.path {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure {
            code: EXIT_INPUT,
            message: format!("{}: {e}", path.display()),
        })?,
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("stdin: {e}"),
            })?;
            buf
        }
    };
    Ok(read_instance(&text)?)
}

fn emit(cli: &Cli, value: Value, text: String) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json values serialize"));
    } else {
        print!("{text}");
    }
}

fn chain_json(c: &SubsetChain) -> Value {
    json!(c.sets())
}

fn triples_json(rep: &Representation) -> Value {
    json!(rep.triples().iter().map(|&(i, j, m)| [i, j, m]).collect::<Vec<_>>())
}

fn run(cli: &Cli) -> Outcome {
    let guard = Guard::new(cli.guard);
    match &cli.command {
        Command::Catenoid(input) => {
            let inst = load(cli, input)?;
            match is_catenoid(inst.rep()) {
                Catenoid::Chain(chain) => {
                    let names: Vec<String> = chain.iter().map(|iv| iv.to_string()).collect();
                    emit(
                        cli,
                        json!({"catenoid": true, "chain": names}),
                        format!("catenoid: yes\nchain: {}\n", names.join(" < ")),
                    );
                }
                Catenoid::Incomparable(a, b) => emit(
                    cli,
                    json!({"catenoid": false, "incomparable": [a.to_string(), b.to_string()]}),
                    format!("catenoid: no\nincomparable: {a} and {b}\n"),
                ),
            }
        }
        Command::Resolve(input) => {
            let inst = load(cli, input)?;
            let res = minimal_resolution(inst.rep());
            let f: Vec<usize> = inst.e().iter().zip(res.q.iter()).map(|(e, q)| e + q).collect();
            let big_n = res.r.at(inst.n());
            emit(
                cli,
                json!({"q": res.q, "r": res.r, "f": f, "N": big_n}),
                format!("q = {}\nr = {}\nf = {}\nN = {big_n}\n", res.q, res.r, sqg::DimVector::new(f.clone())),
            );
        }
        Command::Nonempty(input) => {
            let inst = load(cli, input)?;
            build_frame(&inst)?;
            let ne = nonempty(&inst);
            emit(cli, json!({"nonempty": ne}), format!("nonempty: {ne}\n"));
        }
        Command::Simple(input) => {
            let inst = load(cli, input)?;
            build_frame(&inst)?;
            let s = is_simple(&inst);
            emit(cli, json!({"simple": s}), format!("simple: {s}\n"));
        }
        Command::Decompose(input) => {
            let inst = load(cli, input)?;
            build_frame(&inst)?;
            let factors = decompose_simple(&inst)?;
            let mut text = String::new();
            let mut values = Vec::new();
            for f in &factors {
                text.push_str(&format!("{f}\n"));
                values.push(json!({
                    "first_vertex": f.first_vertex,
                    "instance": InstanceSpec::from_instance(&f.instance),
                }));
            }
            emit(cli, json!({"factors": values}), text);
        }
        Command::Irreducible(input) => {
            let inst = load(cli, input)?;
            let frame = build_frame(&inst)?;
            let criterion = is_irreducible(&inst)?;
            let count = maximal_elements(&enumerate_fixed_points(&frame, guard)?).len();
            let mut text = format!("irreducible: {criterion} (rank criterion on simple factors)\ncomponents: {count}\n");
            if criterion != (count == 1) {
                text.push_str(
                    "note: the rank criterion is sufficient but not necessary; \
                     the fixed points have a unique Bruhat-maximal element here\n",
                );
            }
            let mut value = json!({"irreducible": criterion, "components": count});
            if is_simple(&inst) {
                if let Some((u, hom, pairing)) = hom_criterion_witness(&inst) {
                    text.push_str(&format!("hom criterion violated at M{u}: [M,U] = {hom} > <e,dim U> = {pairing}\n"));
                    value["hom_witness"] = json!({"interval": u.to_string(), "hom": hom, "pairing": pairing});
                }
            }
            emit(cli, value, text);
        }
        Command::Components(input) => {
            let inst = load(cli, input)?;
            let frame = build_frame(&inst)?;
            let chains = enumerate_fixed_points(&frame, guard)?;
            let tops = maximal_elements(&chains);
            let word = if is_simple(&inst) && rank_criterion(&inst) {
                Some(weyl_word(&inst)?)
            } else {
                None
            };
            let mut text = String::new();
            let mut values = Vec::new();
            for (k, c) in tops.iter().enumerate() {
                let dim = cell_dimension(c);
                let sub = subrep_type(&frame, c)?;
                text.push_str(&format!("component {}: chain {c}, dim {dim}, subrep {sub}", k + 1));
                let mut v = json!({"chain": chain_json(c), "dim": dim, "subrep": triples_json(&sub)});
                if let Some(w) = &word {
                    text.push_str(&format!(", weyl {} word {:?}", w.permutation, w.word));
                    v["weyl_word"] = json!({"word": w.word, "one_line": w.permutation.one_line()});
                }
                text.push('\n');
                values.push(v);
            }
            let mut value = json!({"fixed_points": chains.len(), "components": values});
            if family("complexes", inst.n()).is_ok_and(|c| c == inst) {
                let note = format!(
                    "the {} fixed points are counted by the Fibonacci number F_{}; \
                     the {} components are the maximal binary strings of length {} without adjacent ones",
                    chains.len(),
                    inst.n() + 2,
                    tops.len(),
                    inst.n()
                );
                text.push_str(&format!("note: {note}\n"));
                value["note"] = json!(note);
            }
            emit(cli, value, text);
        }
        Command::Weyl(input) => {
            let inst = load(cli, input)?;
            build_frame(&inst)?;
            let w = weyl_word(&inst)?;
            emit(
                cli,
                json!({"word": w.word, "one_line": w.permutation.one_line(), "length": w.word.len()}),
                format!("one-line: {}\nword: {:?}\nlength: {}\n", w.permutation, w.word, w.word.len()),
            );
        }
        Command::FixedPoints(input) => {
            let inst = load(cli, input)?;
            let frame = build_frame(&inst)?;
            let chains = enumerate_fixed_points(&frame, guard)?;
            let mut text = String::new();
            let values: Vec<Value> = chains
                .iter()
                .map(|c| {
                    let dim = cell_dimension(c);
                    text.push_str(&format!("{c} dim {dim}\n"));
                    json!({"chain": chain_json(c), "dim": dim})
                })
                .collect();
            text.push_str(&format!("total: {}\n", chains.len()));
            emit(cli, json!({"fixed_points": values, "total": chains.len()}), text);
        }
        Command::SubrepTypes(input) => {
            let inst = load(cli, input)?;
            let frame = build_frame(&inst)?;
            let mut text = String::new();
            let mut values = Vec::new();
            for c in enumerate_fixed_points(&frame, guard)? {
                let sub = subrep_type(&frame, &c)?;
                text.push_str(&format!("{c} -> {sub}\n"));
                values.push(json!({"chain": chain_json(&c), "subrep": triples_json(&sub)}));
            }
            emit(cli, json!({"subrep_types": values}), text);
        }
        Command::Poincare { input, method } => {
            let inst = load(cli, input)?;
            let frame = build_frame(&inst)?;
            let formula = match method {
                Method::Cells => None,
                _ => Some(poincare::poincare_formula::<BigUint>(&inst, guard)?),
            };
            let cells = match method {
                Method::Formula => None,
                _ => Some(poincare::poincare_cells::<BigUint>(&frame, guard)?),
            };
            if let (Some(a), Some(b)) = (&formula, &cells) {
                if a != b {
                    return Err(Failure {
                        code: EXIT_MISMATCH,
                        message: format!("poincare mismatch: formula {a}, cells {b}"),
                    });
                }
            }
            let poly: &BigPoly = formula.as_ref().or(cells.as_ref()).expect("one method ran");
            let mut value = json!({"polynomial": poly.to_string()});
            if let Some(f) = &formula {
                value["formula"] = json!(f.to_string());
            }
            if let Some(c) = &cells {
                value["cells"] = json!(c.to_string());
            }
            let agree = if *method == Method::Both { " (formula and cells agree)" } else { "" };
            emit(cli, value, format!("{poly}{agree}\n"));
        }
        Command::Euler(input) => {
            let inst = load(cli, input)?;
            build_frame(&inst)?;
            let chi = poincare::euler_characteristic::<BigUint>(&inst, guard)?;
            emit(cli, json!({"euler": chi.to_string()}), format!("{chi}\n"));
        }
        Command::Blocks(input) => {
            let inst = load(cli, input)?;
            let blocks = parabolic_blocks(inst.rep())?;
            let parts: Vec<String> = blocks.iter().map(|b| b.to_string()).collect();
            emit(cli, json!({"blocks": blocks}), format!("blocks: {}\n", parts.join(" ")));
        }
        Command::Report(input) => {
            let inst = load(cli, input)?;
            let report = Report::build(&inst, guard)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report_text(&report));
            }
        }
        Command::Verify {
            max_n,
            max_summands,
            seed,
            samples,
        } => {
            let report = verify(&VerifyConfig {
                max_n: *max_n,
                max_summands: *max_summands,
                sample: seed.map(|s| (s, *samples)),
                guard,
            });
            let mut text = format!(
                "instances: {} exhaustive, {} sampled, {} skipped by the guard\n",
                report.exhaustive_instances, report.sampled_instances, report.skipped
            );
            for t in &report.properties {
                let status = if t.failures == 0 { "PASS" } else { "FAIL" };
                text.push_str(&format!("{status} {} ({} checked, {} failed)\n", t.property, t.checked, t.failures));
                if let Some(ex) = &t.first_failure {
                    text.push_str(&format!("     first failure: {ex}\n"));
                }
            }
            if report.tally(Property::OneComponentIffIrreducible).failures > 0 {
                text.push_str(
                    "note: a unique Bruhat-maximal fixed point does not force the rank criterion; \
                     the converse direction holds throughout\n",
                );
            }
            emit(cli, json!(report), text);
            if !report.all_passed() {
                return Err(Failure {
                    code: EXIT_MISMATCH,
                    message: format!("{} properties failed", report.failing().count()),
                });
            }
        }
    }
    Ok(())
}

fn report_text(r: &Report) -> String {
    let mut s = String::new();
    s.push_str(&format!("instance: {}\n", r.instance.to_json()));
    s.push_str(&format!("catenoid: {}\nq = {:?}\nr = {:?}\nf = {:?}\nN = {}\n", r.catenoid, r.q, r.r, r.f, r.big_n));
    s.push_str(&format!("nonempty: {}\nsimple: {}\n", r.nonempty, r.simple));
    match r.irreducible {
        Some(b) => s.push_str(&format!("irreducible: {b}\n")),
        None => s.push_str("irreducible: n/a (empty)\n"),
    }
    s.push_str(&format!("fixed points: {}\ncomponents: {}\n", r.fixed_points, r.components.len()));
    for c in &r.components {
        s.push_str(&format!("  chain {:?} dim {} subrep {:?}", c.chain, c.dim, c.subrep));
        if let Some(w) = &c.weyl_word {
            s.push_str(&format!(" weyl {:?} word {:?}", w.one_line, w.word));
        }
        s.push('\n');
    }
    s.push_str(&format!("poincare: {} (cells: {})\neuler: {}\nblocks: {:?}\n", r.poincare.formula, r.poincare.cells, r.euler, r.blocks));
    s
}
