//! `nodecount`: command-line calculator for node polynomials, nodal curve
//! counts and Enriques diagrams.

mod output;

use std::io::Read;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};
use nodecount_core::abelian::{
    abelian_count, abelian_count_at, bryan_leung_oracle, fixed_class_count, k_very_ample_ok,
    thm52_validity, SurfaceKind,
};
use nodecount_core::enriques::{
    enumerate_diagrams, identify, invariants, lemma35_report, parse_diagram, validate,
    EnriquesDiagram,
};
use nodecount_core::grass::{
    quintic_irreducible, threefold_3nodal_lines, threefold_6nodal, threefold_6nodal_symbolic,
    threefold_validity,
};
use nodecount_core::nodegen::{node_polynomials, MAX_Q};
use nodecount_core::surface::{
    plane_count, plane_validity, severi_degree, surface_aq, ChernNumbers,
};
use nodecount_core::Error;

use output::{write_records, Format, Record};

#[derive(Debug, Parser)]
#[command(name = "nodecount", version, about, allow_negative_numbers = true)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the node polynomials b_q(v, w1, w2).
    Bq {
        /// Print only b_q.
        #[arg(long)]
        q: Option<usize>,
    },
    /// Nodal curves in a linear system on the plane.
    Plane {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        m: Option<i64>,
        /// The classes a_1..a_8 as polynomials in m.
        #[arg(long)]
        table: bool,
        /// N_r as a polynomial in m.
        #[arg(long)]
        symbolic: bool,
        /// With --symbolic: N_r on a general surface, in d, k, s, x.
        #[arg(long, requires = "symbolic")]
        general: bool,
    },
    /// Nodal plane sections of a threefold in P^4.
    P4 {
        /// Evaluate the 6-nodal count at degree m.
        #[arg(long)]
        m: Option<i64>,
        /// The 6-nodal count as a polynomial in m.
        #[arg(long)]
        symbolic: bool,
        /// 3-nodal plane sections through a line, as a polynomial in m.
        #[arg(long)]
        lines3: bool,
        /// Irreducible 6-nodal plane quintic sections of a quintic.
        #[arg(long)]
        irreducible: bool,
    },
    /// Nodal curves on an abelian surface.
    Abelian {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        g: Option<i64>,
        /// N(g, r) for r = 0..8.
        #[arg(long)]
        table: bool,
        /// Curves in a fixed class instead of up to translation.
        #[arg(long)]
        fixed_class: bool,
        /// Evaluate the divisor-sum generating series instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Enriques diagrams in the line-based text format.
    Enriques {
        #[command(subcommand)]
        action: EnriquesCommand,
    },
    /// Validity predicates.
    Validity {
        #[command(subcommand)]
        which: ValidityCommand,
    },
}

#[derive(Debug, Subcommand)]
enum EnriquesCommand {
    /// Check a diagram file (`-` for stdin) against the axioms.
    Check { file: String },
    /// Numerical invariants of a diagram.
    Invariants { file: String },
    /// The eight codimension inequalities of a single-root diagram.
    Lemma35 { file: String },
    /// Count diagrams up to isomorphism by number of vertices.
    Enumerate {
        #[arg(long)]
        max_v: usize,
        #[arg(long)]
        max_w: u32,
    },
}

#[derive(Debug, Subcommand)]
enum ValidityCommand {
    /// Plane curves of degree m with r nodes.
    Plane {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        m: i64,
    },
    /// r-nodal curves in m times a primitive class of genus g.
    Abelian {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        r: i64,
    },
    /// k-very ampleness of m times a class of self-intersection d.
    Kva {
        #[arg(long, value_parser = |s: &str| s.parse::<SurfaceKind>())]
        surface: SurfaceKind,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        k: i64,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NodeCountOutOfRange(_)
            | Error::IndexOutOfRange(_)
            | Error::BellOrderTooLarge(_)
            | Error::GenusTooSmall(_)
            | Error::EnumerationLimit
            | Error::NoSuchNamedDiagram(_)
            | Error::Parse { .. }
            | Error::InvalidDiagram(_)
            | Error::NotSingleRoot(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type Outcome = Result<Vec<Record>, Failure>;

fn usage(msg: &str) -> Failure {
    Failure::Usage(msg.to_string())
}

const PLANE_RANGE: &str = "r <= 8, m >= r/2 + 1";
const P4_RANGE: &str = "m >= 4";

fn bq(q: Option<usize>) -> Outcome {
    let set = node_polynomials()?;
    let qs = match q {
        Some(q) => vec![q],
        None => (1..=MAX_Q).collect(),
    };
    qs.into_iter()
        .map(|q| Ok(Record::new("bq", "node-polynomial", set.b(q)?).input("q", q)))
        .collect()
}

fn plane(r: Option<usize>, m: Option<i64>, table: bool, symbolic: bool, general: bool) -> Outcome {
    match (r, m, table, symbolic) {
        (None, None, true, false) => {
            let cn = ChernNumbers::plane();
            (1..=MAX_Q)
                .map(|q| Ok(Record::new("plane", "plane-class", surface_aq(q, &cn)?).input("q", q)))
                .collect()
        }
        (Some(r), None, false, true) => {
            let cn = if general {
                ChernNumbers::symbolic()
            } else {
                ChernNumbers::plane()
            };
            let rec = Record::new("plane", "severi-degree", severi_degree(r, &cn)?).input("r", r);
            Ok(vec![if general {
                rec.input("surface", "general")
            } else {
                rec
            }])
        }
        (Some(r), Some(m), false, false) => {
            let n = plane_count(r, m)?;
            let valid = plane_validity(r as i64, m);
            let rec = Record::new("plane", "severi-degree", n)
                .input("r", r)
                .input("m", m);
            Ok(vec![rec.validity(valid, PLANE_RANGE)])
        }
        _ => Err(usage(
            "plane expects --r R --m M, --table, or --symbolic --r R",
        )),
    }
}

fn p4(m: Option<i64>, symbolic: bool, lines3: bool, irreducible: bool) -> Outcome {
    let rec = match (m, symbolic, lines3, irreducible) {
        (Some(m), false, false, false) => {
            Record::new("p4", "six-nodal-plane-sections", threefold_6nodal(m)?)
                .input("m", m)
                .validity(threefold_validity(m), P4_RANGE)
        }
        (None, true, false, false) => Record::new(
            "p4",
            "six-nodal-plane-sections",
            threefold_6nodal_symbolic()?,
        ),
        (None, false, true, false) => Record::new(
            "p4",
            "three-nodal-sections-through-a-line",
            threefold_3nodal_lines()?,
        ),
        (None, false, false, true) => Record::new(
            "p4",
            "irreducible-six-nodal-quintic-sections",
            quintic_irreducible()?,
        )
        .input("m", 5),
        _ => {
            return Err(usage(
                "p4 expects exactly one of --m M, --symbolic, --lines3, --irreducible",
            ))
        }
    };
    Ok(vec![rec])
}

fn abelian(r: Option<usize>, g: Option<i64>, table: bool, fixed: bool, oracle: bool) -> Outcome {
    let rec = match (r, g, table, fixed, oracle) {
        (None, None, true, false, false) => {
            return (0..=8)
                .map(|r| {
                    Ok(Record::new("abelian", "abelian-count", abelian_count(r)?).input("r", r))
                })
                .collect();
        }
        (Some(r), None, false, true, false) => {
            Record::new("abelian", "abelian-fixed-class", fixed_class_count(r)?).input("r", r)
        }
        (Some(r), Some(g), false, false, true) => {
            Record::new("abelian", "divisor-sum-series", bryan_leung_oracle(g, r)?)
                .input("g", g)
                .input("r", r)
        }
        (Some(r), None, false, false, false) => {
            Record::new("abelian", "abelian-count", abelian_count(r)?).input("r", r)
        }
        (Some(r), Some(g), false, false, false) => {
            let valid = thm52_validity(1, g, r as i64);
            Record::new("abelian", "abelian-count", abelian_count_at(r, g)?)
                .input("g", g)
                .input("r", r)
                .validity(valid, "g > 5r + 7")
        }
        _ => return Err(usage(
            "abelian expects --r R [--g G], --table, --fixed-class --r R, or --oracle --g G --r R",
        )),
    };
    Ok(vec![rec])
}

fn read_diagram(file: &str) -> Result<EnriquesDiagram, Failure> {
    let text = if file == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(&format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| usage(&format!("reading {file}: {e}")))?
    };
    Ok(parse_diagram(&text)?)
}

const ROMAN: [&str; 8] = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"];

fn enriques(action: EnriquesCommand) -> Outcome {
    match action {
        EnriquesCommand::Check { file } => {
            let d = read_diagram(&file)?;
            let (result, valid) = match validate(&d) {
                Ok(()) => ("valid".to_string(), true),
                Err(v) => (format!("invalid: {v}"), false),
            };
            let mut rec =
                Record::new("enriques check", "enriques-axioms", result).input("file", &file);
            rec.valid = Some(valid);
            Ok(vec![rec])
        }
        EnriquesCommand::Invariants { file } => {
            let d = read_diagram(&file)?;
            let inv = invariants(&d)?;
            let mut values = vec![
                ("roots", inv.roots),
                ("free", inv.free),
                ("dim", inv.dim),
                ("deg", inv.deg),
                ("cod", inv.cod),
                ("delta", inv.delta),
                ("branches", inv.branches),
                ("milnor", inv.milnor),
            ];
            if let Some(j) = inv.jacobian_mult {
                values.push(("jacobian_mult", j));
            }
            let mut records: Vec<Record> = values
                .into_iter()
                .map(|(name, v)| {
                    Record::new("enriques invariants", "diagram-invariants", v)
                        .input("file", &file)
                        .input("invariant", name)
                })
                .collect();
            if let Some(name) = identify(&d) {
                records.push(
                    Record::new("enriques invariants", "diagram-invariants", name)
                        .input("file", &file)
                        .input("invariant", "type"),
                );
            }
            Ok(records)
        }
        EnriquesCommand::Lemma35 { file } => {
            let d = read_diagram(&file)?;
            let report = lemma35_report(&d)?;
            Ok((1..=8)
                .map(|n| {
                    let p = report.part(n);
                    let rel = if n == 1 { "=" } else { "<=" };
                    let tag = if p.equality { " (equality)" } else { "" };
                    let mut rec = Record::new(
                        "enriques lemma35",
                        "codimension-inequalities",
                        format!("{} {rel} {}{tag}", p.lhs, p.rhs),
                    )
                    .input("file", &file)
                    .input("part", ROMAN[n - 1]);
                    rec.valid = Some(p.holds);
                    rec
                })
                .collect())
        }
        EnriquesCommand::Enumerate { max_v, max_w } => {
            let all = enumerate_diagrams(max_v, max_w)?;
            let mut records: Vec<Record> = (1..=max_v)
                .map(|n| {
                    let count = all.iter().filter(|d| d.len() == n).count();
                    Record::new("enriques enumerate", "diagram-census", count)
                        .input("max_w", max_w)
                        .input("vertices", n)
                })
                .collect();
            records.push(
                Record::new("enriques enumerate", "diagram-census", all.len())
                    .input("max_w", max_w)
                    .input("vertices", format!("1..={max_v}")),
            );
            Ok(records)
        }
    }
}

fn validity(which: ValidityCommand) -> Outcome {
    let rec = match which {
        ValidityCommand::Plane { r, m } => {
            let v = plane_validity(r, m);
            Record::new("validity plane", "plane-range", v)
                .input("r", r)
                .input("m", m)
                .validity(v, PLANE_RANGE)
        }
        ValidityCommand::Abelian { m, g, r } => {
            let v = thm52_validity(m, g, r);
            let cond = if m == 1 {
                "g > 5r + 7"
            } else {
                "g(2m - 2) > 3m^2 r + 3m^2 - 2mr + 2m + 2r - 2"
            };
            Record::new("validity abelian", "abelian-range", v)
                .input("m", m)
                .input("g", g)
                .input("r", r)
                .validity(v, cond)
        }
        ValidityCommand::Kva { surface, m, d, k } => {
            let v = k_very_ample_ok(surface, m, d, k);
            let cond = match surface {
                SurfaceKind::Abelian => "m = 1, d > 4(k + 1); or m >= 2, (m - 1)d > m^2(k + 1)",
                SurfaceKind::K3 => "m = 1, d >= 4k; or m >= 2, (m - 1)d > m^2(k + 1)",
                SurfaceKind::Enriques => "m >= 1, d >= 4(k + 1)",
            };
            Record::new("validity kva", "k-very-ampleness", v)
                .input("surface", format!("{surface:?}").to_lowercase())
                .input("m", m)
                .input("d", d)
                .input("k", k)
                .validity(v, cond)
        }
    };
    Ok(vec![rec])
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Bq { q } => bq(q),
        Command::Plane {
            r,
            m,
            table,
            symbolic,
            general,
        } => plane(r, m, table, symbolic, general),
        Command::P4 {
            m,
            symbolic,
            lines3,
            irreducible,
        } => p4(m, symbolic, lines3, irreducible),
        Command::Abelian {
            r,
            g,
            table,
            fixed_class,
            oracle,
        } => abelian(r, g, table, fixed_class, oracle),
        Command::Enriques { action } => enriques(action),
        Command::Validity { which } => validity(which),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(records) => {
            let stdout = std::io::stdout();
            if let Err(e) = write_records(&mut stdout.lock(), &records, format) {
                eprintln!("error: writing output: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            let mut cmd = Cli::command();
            cmd.error(clap::error::ErrorKind::ValueValidation, msg)
                .print()
                .ok();
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
