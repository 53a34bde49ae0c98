mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use semicat::category::{
    ell_malcev_membership, is_lh_morphism_cat, kernel_category, mpq_factorize, supertech_check,
    DEFAULT_KERNEL_OBJECT_CAP,
};
use semicat::congruence::{Congruence, DEFAULT_CONGRUENCE_CAP};
use semicat::error::{Error, Result};
use semicat::ggm::{canonical_ggm_quotients, ggm_quotient, lh_canonical_congruence, malcev_membership};
use semicat::groups::{h_radical_with_cap, subgroup_generated, FiniteGroup, DEFAULT_NORMAL_SUBGROUP_CAP};
use semicat::lh::{is_lh_morphism, local_monoid};
use semicat::rees::rees_representation;
use semicat::verify::{run_all, run_suite, VerifyConfig};
use semicat::{greens, pvar, zoo};

use input::{load, parse_pair, Object};

#[derive(Parser)]
#[command(
    name = "semicat",
    version,
    about = "Finite monoids, categories and LH Mal'cev products"
)]
struct Cli {
    /// Seed for corpus sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit JSON (the only output format; accepted for scripts).
    #[arg(long, global = true)]
    json: bool,
    /// Upper bound on congruence-lattice enumeration (element count).
    #[arg(long, global = true)]
    congruence_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct MorphismArgs {
    /// Congruence file `{"classes": [...]}` defining the quotient.
    #[arg(long)]
    congruence: Option<PathBuf>,
    /// Generating pair `x,y` for the kernel congruence; repeatable.
    #[arg(long = "pair", value_parser = parse_pair)]
    pairs: Vec<(usize, usize)>,
}

#[derive(Subcommand)]
enum Command {
    /// Green's relations and the J-order.
    Green { input: String },
    /// Local monoid eSe of a monoid, or C(c, c) of a category.
    Localmonoid {
        input: String,
        /// Idempotent of a monoid.
        #[arg(long)]
        e: Option<usize>,
        /// Object of a category.
        #[arg(long)]
        object: Option<usize>,
    },
    /// H-radical of a group.
    Radical {
        input: String,
        #[arg(long)]
        pvar: String,
    },
    /// Rees coordinates of the regular J-classes.
    Rees {
        input: String,
        #[arg(long)]
        j: Option<usize>,
    },
    /// GGM quotient at a regular J-class modulo a normal subgroup of G_J.
    Ggm {
        input: String,
        #[arg(long)]
        j: usize,
        /// Take N as the radical for this group pseudovariety.
        #[arg(long, conflicts_with = "normal")]
        h: Option<String>,
        /// Generators of N as group element indices, comma separated.
        #[arg(long, value_delimiter = ',')]
        normal: Vec<usize>,
    },
    /// Canonical LH congruence and its GGM factors.
    CanonLh {
        input: String,
        #[arg(long)]
        h: String,
    },
    /// Membership in LH Mal'cev V (monoid) or its local version (category).
    Malcev {
        input: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        v: String,
    },
    /// Consolidation monoid of a category.
    Consolidate { input: String },
    /// Kernel category of a quotient morphism.
    Kernel {
        input: String,
        #[command(flatten)]
        morphism: MorphismArgs,
    },
    /// Whether a quotient morphism is an LH-morphism.
    CheckLh {
        input: String,
        #[arg(long)]
        h: String,
        #[command(flatten)]
        morphism: MorphismArgs,
    },
    /// Factor a quotient morphism into minimal proper quotients.
    FactorMpq {
        input: String,
        #[command(flatten)]
        morphism: MorphismArgs,
    },
    /// Quotient of a category by the restricted canonical LH congruence.
    Supertech {
        input: String,
        #[arg(long)]
        h: String,
        #[arg(long, default_value = "sl")]
        v: String,
    },
    /// Run invariant suites over the seeded corpus.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        suite: Vec<String>,
        #[arg(long)]
        all: bool,
        /// Largest monoid handed to brute-force oracles.
        #[arg(long, default_value_t = 8)]
        bound: usize,
        /// Number of random monoids in the corpus.
        #[arg(long, default_value_t = 200)]
        random: usize,
    },
    /// Print a builtin object, or list them.
    Zoo {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

/// Limits read from `SEMICAT_SIZE_CAP`: a bare integer sets the congruence
/// cap, otherwise `congruences=N,kernel=N,normal=N`.
struct Caps {
    congruences: usize,
    kernel: usize,
    normal: usize,
}

impl Caps {
    fn from_env(flag: Option<usize>) -> Result<Caps> {
        let mut caps = Caps {
            congruences: DEFAULT_CONGRUENCE_CAP,
            kernel: DEFAULT_KERNEL_OBJECT_CAP,
            normal: DEFAULT_NORMAL_SUBGROUP_CAP,
        };
        if let Ok(raw) = std::env::var("SEMICAT_SIZE_CAP") {
            let bad = || Error::Parse(format!("SEMICAT_SIZE_CAP={raw:?}"));
            if let Ok(n) = raw.trim().parse() {
                caps.congruences = n;
            } else {
                for item in raw.split(',').filter(|s| !s.trim().is_empty()) {
                    let (k, v) = item.split_once('=').ok_or_else(bad)?;
                    let v: usize = v.trim().parse().map_err(|_| bad())?;
                    match k.trim() {
                        "congruences" => caps.congruences = v,
                        "kernel" => caps.kernel = v,
                        "normal" => caps.normal = v,
                        _ => return Err(bad()),
                    }
                }
            }
        }
        if let Some(n) = flag {
            caps.congruences = n;
        }
        Ok(caps)
    }
}

enum Outcome {
    Value(Value),
    Verdict(Value, bool),
}

fn parse_json(text: String) -> Value {
    serde_json::from_str(&text).expect("library emits valid JSON")
}

fn congruence_json(k: &Congruence) -> Value {
    json!({ "classes": k.class_ids(), "num_classes": k.num_classes() })
}

fn run(cli: Cli) -> Result<Outcome> {
    let caps = Caps::from_env(cli.congruence_cap)?;
    let out = match cli.command {
        Command::Green { input } => {
            let m = load(&input)?.monoid()?;
            let g = greens(&m);
            let mut v = serde_json::to_value(&g).expect("greens serializes");
            v["j_order"] = json!(g.j_order_pairs());
            Outcome::Value(v)
        }
        Command::Localmonoid { input, e, object } => match (load(&input)?, e, object) {
            (Object::Category(c), None, Some(o)) => {
                let (local, arrows) = c.local_monoid_at(o)?;
                Outcome::Value(json!({ "monoid": parse_json(local.to_json()), "arrows": arrows }))
            }
            (obj, Some(e), None) => {
                let (local, elems) = local_monoid(&obj.monoid()?, e)?;
                Outcome::Value(json!({ "monoid": parse_json(local.to_json()), "elements": elems }))
            }
            _ => return Err(Error::Parse("give --e for a monoid or --object for a category".into())),
        },
        Command::Radical { input, pvar } => {
            let g = FiniteGroup::from_monoid(load(&input)?.monoid()?)?;
            let h = pvar::parse(&pvar)?;
            let rad = h_radical_with_cap(&g, &h, caps.normal)?;
            Outcome::Value(json!({ "order": rad.order(), "elements": rad.elements() }))
        }
        Command::Rees { input, j } => {
            let m = load(&input)?.monoid()?;
            let g = greens(&m);
            let classes = match j {
                Some(j) => vec![j],
                None => g.regular_j_classes(),
            };
            let reps = classes
                .into_iter()
                .map(|j| rees_representation(&m, &g, j).map(|r| r.to_json()))
                .collect::<Result<Vec<_>>>()?;
            Outcome::Value(json!(reps))
        }
        Command::Ggm { input, j, h, normal } => {
            let m = load(&input)?.monoid()?;
            let g = greens(&m);
            let rep = rees_representation(&m, &g, j)?;
            let n = match h {
                Some(h) => h_radical_with_cap(&rep.group, &pvar::parse(&h)?, caps.normal)?,
                None => subgroup_generated(&rep.group, &normal)?,
            };
            let r = ggm_quotient(&m, j, &n)?;
            Outcome::Value(json!({
                "jclass": r.jclass,
                "normal": n.elements(),
                "congruence": congruence_json(&r.congruence),
                "quotient": parse_json(r.quotient.to_json()),
            }))
        }
        Command::CanonLh { input, h } => {
            let m = load(&input)?.monoid()?;
            let h = pvar::parse(&h)?;
            let k = lh_canonical_congruence(&m, &h)?;
            let factors: Vec<Value> = canonical_ggm_quotients(&m, &h)?
                .into_iter()
                .map(|r| json!({ "jclass": r.jclass, "congruence": congruence_json(&r.congruence) }))
                .collect();
            let (q, _) = semicat::congruence::quotient(&m, &k)?;
            Outcome::Value(json!({
                "congruence": congruence_json(&k),
                "quotient": parse_json(q.to_json()),
                "factors": factors,
            }))
        }
        Command::Malcev { input, h, v } => {
            let (h, v) = (pvar::parse(&h)?, pvar::parse(&v)?);
            let member = match load(&input)? {
                Object::Monoid(m) => malcev_membership(&m, &h, &v)?,
                Object::Category(c) => ell_malcev_membership(&c, &h, &v)?,
            };
            Outcome::Verdict(json!({ "member": member }), member)
        }
        Command::Consolidate { input } => {
            let (cd, embed) = load(&input)?.category()?.consolidation();
            Outcome::Value(json!({ "monoid": parse_json(cd.to_json()), "arrows": embed }))
        }
        Command::Kernel { input, morphism } => {
            let c = load(&input)?.category()?;
            let phi = input::category_projection(&c, morphism.congruence.as_deref(), &morphism.pairs)?;
            let k = kernel_category(&phi, caps.kernel)?;
            Outcome::Value(json!({
                "category": parse_json(k.category.to_json()),
                "objects": k.objects,
                "arrows": k.arrows,
            }))
        }
        Command::CheckLh { input, h, morphism } => {
            let h = pvar::parse(&h)?;
            let file = morphism.congruence.as_deref();
            let lh = match load(&input)? {
                Object::Monoid(m) => is_lh_morphism(&input::monoid_projection(&m, file, &morphism.pairs)?, &h)?,
                Object::Category(c) => is_lh_morphism_cat(&input::category_projection(&c, file, &morphism.pairs)?, &h)?,
            };
            Outcome::Verdict(json!({ "lh": lh }), lh)
        }
        Command::FactorMpq { input, morphism } => {
            let c = load(&input)?.category()?;
            let phi = input::category_projection(&c, morphism.congruence.as_deref(), &morphism.pairs)?;
            let chain: Vec<Value> = mpq_factorize(&phi)?
                .iter()
                .map(|f| json!({ "kernel": congruence_json(&f.kernel()), "target_arrows": f.target.num_arrows() }))
                .collect();
            Outcome::Value(json!({ "factors": chain }))
        }
        Command::Supertech { input, h, v } => {
            let c = load(&input)?.category()?;
            let (st, member) = supertech_check(&c, &pvar::parse(&h)?, &pvar::parse(&v)?)?;
            Outcome::Value(json!({
                "congruence": congruence_json(&st.congruence),
                "quotient": parse_json(st.quotient.to_json()),
                "member": member,
            }))
        }
        Command::Verify {
            suite,
            all,
            bound,
            random,
        } => {
            let cfg = VerifyConfig {
                seed: cli.seed,
                bound,
                random_monoids: random,
                random_max_size: bound.min(6),
                congruence_cap: caps.congruences,
                ..Default::default()
            };
            let reports = if all {
                run_all(&cfg)
            } else {
                suite.iter().map(|s| run_suite(s, &cfg)).collect::<Result<Vec<_>>>()?
            };
            let ok = reports.iter().all(|r| r.passed());
            Outcome::Verdict(json!({ "passed": ok, "suites": reports }), ok)
        }
        Command::Zoo { name, list } => match (name, list) {
            (None, true) => Outcome::Value(json!({ "monoids": zoo::MONOID_NAMES, "categories": zoo::CATEGORY_NAMES })),
            (Some(name), false) => Outcome::Value(parse_json(zoo::lookup(&name)?.to_json())),
            _ => return Err(Error::Parse("give a builtin name or --list".into())),
        },
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Value(v)) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Verdict(v, ok)) => {
            println!("{v}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e.code(), "message": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
