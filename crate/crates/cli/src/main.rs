use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use roughfca::generate::{random_enriched_context, rng_for, ContextParams};
use roughfca::lattice::ConceptLattice;
use roughfca::lifting::{lift_kripke, verify_lifting_iso};
use roughfca::logic::{correspondence_check, parse_sequent, CorrespondenceItem};
use roughfca::manyvalued::{self as mv, AKripkeFrame, AMatrix, HeytingAlgebra};
use roughfca::relations::classify_context;

use roughfca_cli::cxt::read_cxt;
use roughfca_cli::dot::lattice_to_dot;
use roughfca_cli::json::{read_algebra, read_enriched, read_frame, read_space, write_enriched};
use roughfca_cli::report::RunReport;

/// Concept lattices, enriched formal contexts, and their modal structure.
#[derive(Parser)]
#[command(name = "roughfca", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the concept lattice of a Burmeister .cxt context.
    Lattice {
        /// Input context in .cxt format.
        file: PathBuf,
        /// Write a DOT rendering of the Hasse diagram here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Load an enriched-context JSON document and report its frame classes.
    Classify {
        file: PathBuf,
        /// Accept relations that are not I-compatible.
        #[arg(long)]
        permissive: bool,
    },
    /// Check one correspondence item on random contexts, on the exhaustive
    /// 2x2 corpus, or on a single context file.
    Correspond {
        /// Item: 1..12 or T1..T4.
        #[arg(long)]
        item: String,
        /// Number of seeded random contexts.
        #[arg(long, default_value_t = 0)]
        random: usize,
        /// Maximum carrier size for random contexts.
        #[arg(long, default_value_t = 4)]
        max: usize,
        /// Seed; required whenever --random is used.
        #[arg(long)]
        seed: Option<u64>,
        /// Also run the exhaustive corpus over |A| = |X| = 2.
        #[arg(long)]
        exhaustive_two: bool,
        /// Check a single enriched-context JSON file instead.
        #[arg(long)]
        context: Option<PathBuf>,
    },
    /// Lift a Kripke frame to an enriched context; optionally verify the
    /// complex-algebra isomorphism.
    LiftKripke {
        file: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// Generate a seeded random I-compatible enriched context as JSON.
    RandomContext {
        #[arg(long, default_value_t = 3)]
        objects: usize,
        #[arg(long, default_value_t = 3)]
        features: usize,
        /// Seed; required.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Force the box relation below the incidence.
        #[arg(long)]
        reflexive: bool,
        /// Force the incidence below the box relation.
        #[arg(long)]
        subdelta: bool,
        /// Also generate triangle relations.
        #[arg(long)]
        triangles: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a sequent `phi |- psi` for frame validity on a context.
    Sequent {
        file: PathBuf,
        /// The sequent, e.g. "box p |- p".
        sequent: String,
        #[arg(long)]
        permissive: bool,
    },
    /// Verify the many-valued frame lifting over a truth-value algebra.
    MvPreserve {
        /// Built-in algebra name (bool2, godel3, godel4, boolean4) or a JSON file.
        #[arg(long)]
        algebra: String,
        /// Number of worlds.
        #[arg(long, default_value_t = 2)]
        worlds: usize,
        /// Sample this many random relations instead of exhausting the space.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Seed; required whenever --samples is used.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a partition probability space: duality, monotonicity, and the
    /// canonical indiscernibility relation.
    DsCheck { file: PathBuf },
}

fn load_algebra(spec: &str) -> Result<HeytingAlgebra> {
    if let Ok(alg) = HeytingAlgebra::builtin(spec) {
        return Ok(alg);
    }
    let text = fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
    read_algebra(&text)
}

fn run() -> Result<RunReport> {
    let cli = Cli::parse();
    match cli.command {
        Command::Lattice { file, dot } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {file:?}"))?;
            let (name, p) = read_cxt(&text)?;
            let lat = ConceptLattice::enumerate(&p);
            let mut report = RunReport::new("lattice", None);
            println!(
                "context `{name}`: {} objects, {} features, {} concepts, {} covers",
                p.object_count(),
                p.feature_count(),
                lat.len(),
                lat.hasse_covers().len()
            );
            for c in lat.concepts() {
                println!("  {}", c.render(&p));
            }
            if let Some(path) = dot {
                fs::write(&path, lattice_to_dot(&p, &lat))
                    .with_context(|| format!("writing {path:?}"))?;
                println!("wrote {path:?}");
            }
            report.record(true, String::new);
            Ok(report)
        }
        Command::Classify { file, permissive } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {file:?}"))?;
            let ctx = read_enriched(&text, permissive)?;
            let class = classify_context(&ctx)?;
            let mut report = RunReport::new("classify", None);
            println!("verified: {}", ctx.is_verified());
            println!(
                "approximation space (R_box;R_bbox <= I): {}",
                class.is_approx
            );
            println!(
                "co-approximation space (I <= R_box;R_bbox / I <= R_bbox;R_box): {} / {}",
                class.is_co_approx_box_black, class.is_co_approx_black_box
            );
            println!("reflexive: {}", class.reflexive);
            println!("symmetric: {}", class.symmetric);
            println!("transitive: {}", class.transitive);
            println!("subdelta: {}", class.subdelta);
            println!("dense: {}", class.dense);
            report.record(true, String::new);
            Ok(report)
        }
        Command::Correspond {
            item,
            random,
            max,
            seed,
            exhaustive_two,
            context,
        } => {
            let item = CorrespondenceItem::parse(&item).map_err(|e| anyhow!("{e}"))?;
            let mut report = RunReport::new("correspond", seed);
            if let Some(path) = context {
                let text =
                    fs::read_to_string(&path).with_context(|| format!("reading {path:?}"))?;
                let ctx = read_enriched(&text, false)?;
                let lat = ConceptLattice::enumerate(&ctx.base);
                let rec = correspondence_check(&ctx, &lat, item)?;
                println!(
                    "{}: axiom={} condition={} agree={}",
                    item.describe(),
                    rec.axiom_valid,
                    rec.fo_condition,
                    rec.agree
                );
                report.record(rec.agree, || write_enriched(&ctx));
            }
            if exhaustive_two {
                for inc in roughfca::generate::all_matrices(2, 2) {
                    let p = roughfca::Polarity::new(
                        vec!["a0".into(), "a1".into()],
                        vec!["x0".into(), "x1".into()],
                        inc,
                    )?;
                    for ctx in exhaustive_contexts_for(&p, item)? {
                        let lat = ConceptLattice::enumerate(&ctx.base);
                        let rec = correspondence_check(&ctx, &lat, item)?;
                        report.record(rec.agree, || write_enriched(&ctx));
                    }
                }
            }
            if random > 0 {
                let seed = seed.ok_or_else(|| anyhow!("--seed is required with --random"))?;
                if max < 2 {
                    return Err(anyhow!("--max must be at least 2"));
                }
                for k in 0..random as u64 {
                    let mut params = ContextParams::new(
                        2 + (k % (max as u64 - 1)) as usize,
                        2 + ((k / 2) % (max as u64 - 1)) as usize,
                    );
                    params.triangles = item.needs_triangle();
                    let ctx = random_enriched_context(params, seed.wrapping_add(k))
                        .map_err(|e| anyhow!("{e}"))?;
                    let lat = ConceptLattice::enumerate(&ctx.base);
                    let rec = correspondence_check(&ctx, &lat, item)?;
                    report.record(rec.agree, || write_enriched(&ctx));
                }
            }
            if report.checked == 0 {
                return Err(anyhow!(
                    "nothing to check: pass --random N --seed S, --exhaustive-two, or --context FILE"
                ));
            }
            println!(
                "item {}: agree={}/{}",
                item.describe(),
                report.passed,
                report.checked
            );
            Ok(report)
        }
        Command::LiftKripke { file, verify } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {file:?}"))?;
            let frame = read_frame(&text)?;
            let ctx = lift_kripke(&frame);
            let class = classify_context(&ctx)?;
            let mut report = RunReport::new("lift-kripke", None);
            println!(
                "lifted {} states; approximation space: {}, reflexive: {}, symmetric: {}, transitive: {}",
                frame.states.len(),
                class.is_approx,
                class.reflexive,
                class.symmetric,
                class.transitive
            );
            println!("{}", write_enriched(&ctx));
            if verify {
                let result = verify_lifting_iso(&frame);
                println!(
                    "isomorphism: {} ({} operator instances checked)",
                    if result.pass { "pass" } else { "FAIL" },
                    result.checked
                );
                report.record(result.pass, || result.detail.clone().unwrap_or_default());
            } else {
                report.record(true, String::new);
            }
            Ok(report)
        }
        Command::RandomContext {
            objects,
            features,
            seed,
            density,
            reflexive,
            subdelta,
            triangles,
            out,
        } => {
            let seed = seed.ok_or_else(|| anyhow!("--seed is required"))?;
            let params = ContextParams {
                objects,
                features,
                density,
                reflexive,
                subdelta,
                triangles,
            };
            let ctx = random_enriched_context(params, seed).map_err(|e| anyhow!("{e}"))?;
            let rendered = write_enriched(&ctx);
            match out {
                Some(path) => {
                    fs::write(&path, &rendered).with_context(|| format!("writing {path:?}"))?;
                    println!("wrote {path:?}");
                }
                None => println!("{rendered}"),
            }
            let mut report = RunReport::new("random-context", Some(seed));
            report.record(true, String::new);
            Ok(report)
        }
        Command::Sequent {
            file,
            sequent,
            permissive,
        } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {file:?}"))?;
            let ctx = read_enriched(&text, permissive)?;
            let (lhs, rhs) = parse_sequent(&sequent).map_err(|e| anyhow!("{e}"))?;
            let lat = ConceptLattice::enumerate(&ctx.base);
            let valid =
                roughfca::logic::frame_valid(&ctx, &lat, &lhs, &rhs).map_err(|e| anyhow!("{e}"))?;
            println!(
                "{lhs} |- {rhs}: {}",
                if valid { "valid" } else { "not valid" }
            );
            let mut report = RunReport::new("sequent", None);
            report.record(valid, || {
                // smallest falsifying valuation, by concept order
                for c in lat.concepts() {
                    let mut valuation = roughfca::logic::Valuation::new();
                    for atom in lhs.atoms().union(&rhs.atoms()).cloned() {
                        valuation.insert(atom, *c);
                    }
                    if let Ok(false) =
                        roughfca::logic::sequent_holds(&ctx, &lat, &valuation, &lhs, &rhs)
                    {
                        return format!("falsified with every atom at {}", c.render(&ctx.base));
                    }
                }
                "falsified by a mixed valuation".to_string()
            });
            Ok(report)
        }
        Command::MvPreserve {
            algebra,
            worlds,
            samples,
            seed,
        } => {
            let alg = load_algebra(&algebra)?;
            let mut report = RunReport::new("mv-preserve", seed);
            let cells = worlds * worlds;
            let space = (alg.size() as u128)
                .checked_pow(cells as u32)
                .unwrap_or(u128::MAX);
            let worlds_names: Vec<String> = (0..worlds).map(|i| format!("w{i}")).collect();
            if samples == 0 {
                if space > 1 << 16 {
                    return Err(anyhow!(
                        "relation space {space} too large to exhaust; pass --samples and --seed"
                    ));
                }
                for code in 0..space {
                    let rel = AMatrix::from_fn(worlds, worlds, |i, j| {
                        ((code / (alg.size() as u128).pow((i * worlds + j) as u32))
                            % alg.size() as u128) as mv::Elem
                    });
                    let frame = AKripkeFrame::new(alg.clone(), worlds_names.clone(), rel)
                        .map_err(|e| anyhow!("{e}"))?;
                    let result = mv::mv_verify_preservation(&frame).map_err(|e| anyhow!("{e}"))?;
                    report.record(result.pass, || result.detail.clone().unwrap_or_default());
                }
            } else {
                let seed = seed.ok_or_else(|| anyhow!("--seed is required with --samples"))?;
                let mut rng = rng_for(seed);
                for _ in 0..samples {
                    let rel = roughfca::generate::random_amatrix(&mut rng, &alg, worlds, worlds);
                    let frame = AKripkeFrame::new(alg.clone(), worlds_names.clone(), rel)
                        .map_err(|e| anyhow!("{e}"))?;
                    let result = mv::mv_verify_preservation(&frame).map_err(|e| anyhow!("{e}"))?;
                    report.record(result.pass, || result.detail.clone().unwrap_or_default());
                }
            }
            println!(
                "mv-preserve over {} with {worlds} worlds: {}/{} relations pass",
                alg.name, report.passed, report.checked
            );
            Ok(report)
        }
        Command::DsCheck { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {file:?}"))?;
            let space = read_space(&text)?;
            let mut report = RunReport::new("ds-check", None);
            let n = space.len();
            if n > 16 {
                return Err(anyhow!("carrier too large for exhaustive checks"));
            }
            for z in roughfca::bitset::all_subsets(n) {
                let (inner, outer) = space.inner_outer(&z).map_err(|e| anyhow!("{e}"))?;
                let (inner_c, _) = space
                    .inner_outer(&z.complement())
                    .map_err(|e| anyhow!("{e}"))?;
                let dual = outer == roughfca::dempster::Rational::from_integer(1) - inner_c;
                report.record(inner <= outer && dual, || format!("duality fails at {z:?}"));
            }
            let (_rel, canonical) = roughfca::dempster::canonical_relation_classical(&space)
                .map_err(|e| anyhow!("{e}"))?;
            report.record(canonical.is_equivalence, || {
                "canonical relation not an equivalence".into()
            });
            report.record(canonical.equals_partition, || {
                "canonical relation differs from the partition".into()
            });
            report.record(canonical.finest_compatible, || {
                "a finer compatible equivalence exists".into()
            });
            let lifted =
                roughfca::dempster::lift_partition_space(&space).map_err(|e| anyhow!("{e}"))?;
            let s5 = roughfca::dempster::s5_law_check(&lifted);
            report.record(s5.all_hold(), || format!("{s5:?}"));
            println!(
                "space over {n} elements, {} blocks: checked={} passed={} failed={}",
                space.blocks.len(),
                report.checked,
                report.passed,
                report.failed
            );
            Ok(report)
        }
    }
}

/// For the exhaustive mode: contexts pairing the polarity with every
/// compatible relation the item needs.
fn exhaustive_contexts_for(
    p: &roughfca::Polarity,
    item: CorrespondenceItem,
) -> Result<Vec<roughfca::EnrichedContext>> {
    use roughfca::relations::{is_i_compatible, RelSort, TypedRelation};
    let mut out = Vec::new();
    if item.needs_triangle() {
        for m in roughfca::generate::all_matrices(2, 2) {
            let rtri = TypedRelation::new(RelSort::AA, m);
            if is_i_compatible(p, &rtri).map_err(|e| anyhow!("{e}"))? {
                out.push(
                    roughfca::EnrichedContext::with_identity_modalities(
                        p.clone(),
                        Some(rtri),
                        None,
                    )
                    .map_err(|e| anyhow!("{e}"))?,
                );
            }
        }
    } else {
        let boxes: Vec<TypedRelation> = roughfca::generate::all_matrices(2, 2)
            .map(|m| TypedRelation::new(RelSort::AX, m))
            .filter(|r| is_i_compatible(p, r).unwrap_or(false))
            .collect();
        let dias: Vec<TypedRelation> = roughfca::generate::all_matrices(2, 2)
            .map(|m| TypedRelation::new(RelSort::XA, m))
            .filter(|r| is_i_compatible(p, r).unwrap_or(false))
            .collect();
        for rbox in &boxes {
            for rdia in &dias {
                out.push(
                    roughfca::EnrichedContext::new(
                        p.clone(),
                        rbox.clone(),
                        rdia.clone(),
                        None,
                        None,
                    )
                    .map_err(|e| anyhow!("{e}"))?,
                );
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    match run() {
        Ok(report) => {
            if report.failed > 0 {
                eprintln!("{report}");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
