use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cover_ideals::generate::random_chordal;
use cover_ideals::oracle::HOCHSTER_VERTEX_CAP;
use cover_ideals::{
    betti_from_ordering, elimination_ordering, fvt_ordering_with, fvt_step, graded_recursive_with,
    hochster_betti, induced_matching_number, minimal_covers_bruteforce,
    minimal_covers_recursive_with, shelling_from_ordering, unmixed_1dim_betti,
    unmixed_certificate, verify_linear_quotients, verify_shelling, vv_ordering_with, BettiTable,
    Chordality, Graph, LqVerdict, MonomialOrdering, PivotFallback, PivotRule, RecursionConfig,
    UnmixedBetti, VertexSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::error::CliError;
use crate::parse::parse_graph;
use crate::report::{
    BettiEntry, CrossCheck, InvariantsReport, LabelSet, OrderingReport, RunReport,
    SelftestReport, ShellingReport, UnmixedReport, Witness,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_NOT_CHORDAL: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

/// Environment variable capping the number of memoised subgraphs.
pub const MEMO_CAP_VAR: &str = "COVERIDEAL_MEMO_CAP";

#[derive(Debug, Parser)]
#[command(name = "coverideal", version, about = "Cover ideals of chordal graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock timings (makes output non-deterministic).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chordality test with a witness when it fails.
    Check(Input),
    /// Minimal vertex covers.
    Covers(Input),
    /// Linear-quotients ordering of the cover ideal.
    Ordering {
        #[command(flatten)]
        ordering: OrderingArgs,
        #[arg(long, value_enum, default_value = "vv")]
        method: OrderKind,
    },
    /// Shelling of the independence complex.
    Shelling {
        #[command(flatten)]
        ordering: OrderingArgs,
        #[arg(long, value_enum, default_value = "vv")]
        method: OrderKind,
        /// Check the shelling condition directly.
        #[arg(long)]
        verify: bool,
    },
    /// Graded Betti numbers of the cover ideal.
    Betti {
        #[command(flatten)]
        ordering: OrderingArgs,
        #[arg(long = "method", value_enum, default_value = "all")]
        betti_method: BettiKind,
        /// Ordering used by the `lq` method.
        #[arg(long, value_enum, default_value = "vv")]
        order: OrderKind,
    },
    /// Projective dimension, induced matching number and regularity.
    Invariants {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        pivot: PivotArgs,
    },
    /// Unmixedness certificate and closed-form Betti numbers.
    Unmixed(Input),
    /// Cross-check all methods on random chordal graphs.
    Selftest {
        /// Largest number of vertices.
        #[arg(long, default_value_t = 9)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Edge-list or DIMACS file; stdin when absent or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PivotArgs {
    /// `min`, `max`, `maxdeg`, or a comma-separated list of vertex labels
    /// tried first at every step.
    #[arg(long, default_value = "min")]
    pub pivot: String,
    /// Rule used after a label list is exhausted.
    #[arg(long, value_enum, default_value = "min")]
    pub fallback: FallbackKind,
}

#[derive(Debug, Args)]
pub struct OrderingArgs {
    #[command(flatten)]
    pub input: Input,
    #[command(flatten)]
    pub pivot: PivotArgs,
    /// fvt only: ordering of the covers of the graph minus the closed
    /// neighbourhood of the pivot, as `;`-separated sets.
    #[arg(long)]
    pub outer_order: Option<String>,
    /// fvt only: ordering of the covers of the graph minus the pivot.
    #[arg(long)]
    pub deletion_order: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderKind {
    Vv,
    Fvt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BettiKind {
    Lq,
    Recursive,
    Oracle,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FallbackKind {
    Min,
    Max,
    Maxdeg,
}

impl From<FallbackKind> for PivotFallback {
    fn from(f: FallbackKind) -> Self {
        match f {
            FallbackKind::Min => PivotFallback::MinIndex,
            FallbackKind::Max => PivotFallback::MaxIndex,
            FallbackKind::Maxdeg => PivotFallback::MaxDegree,
        }
    }
}

pub struct Outcome {
    pub report: RunReport,
    pub exit_code: u8,
}

impl Cli {
    fn input(&self) -> Option<&Input> {
        match &self.command {
            Command::Check(i) | Command::Covers(i) | Command::Unmixed(i) => Some(i),
            Command::Ordering { ordering: o, .. }
            | Command::Shelling { ordering: o, .. }
            | Command::Betti { ordering: o, .. } => Some(&o.input),
            Command::Invariants { input, .. } => Some(input),
            Command::Selftest { .. } => None,
        }
    }

    fn name(&self) -> &'static str {
        match self.command {
            Command::Check(_) => "check",
            Command::Covers(_) => "covers",
            Command::Ordering { .. } => "ordering",
            Command::Shelling { .. } => "shelling",
            Command::Betti { .. } => "betti",
            Command::Invariants { .. } => "invariants",
            Command::Unmixed(_) => "unmixed",
            Command::Selftest { .. } => "selftest",
        }
    }
}

/// Reads the input named on the command line (or stdin) and runs it.
pub fn run(cli: &Cli, memo_cap: Option<usize>) -> Result<Outcome, CliError> {
    let text = match cli.input().map(|i| i.input.as_ref()) {
        None => None,
        Some(Some(path)) if path.as_os_str() != "-" => Some(std::fs::read_to_string(path)?),
        Some(_) => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Some(buf)
        }
    };
    run_on_text(cli, text.as_deref(), memo_cap)
}

pub fn run_on_text(cli: &Cli, text: Option<&str>, memo_cap: Option<usize>) -> Result<Outcome, CliError> {
    let mut session = Session {
        report: RunReport {
            command: cli.name().to_string(),
            ..Default::default()
        },
        timings: BTreeMap::new(),
        memo_cap,
    };
    let exit_code = match (&cli.command, text) {
        (Command::Selftest { n, cases, seed }, _) => session.selftest(*n, *cases, *seed)?,
        (command, Some(text)) => {
            session.report.input_digest = Some(hex::encode(Sha256::digest(text.as_bytes())));
            let g = session.timed("parse", || parse_graph(text))?;
            session.report.n = Some(g.n());
            session.dispatch(command, &g)?
        }
        (_, None) => return Err(CliError::Usage("missing input".into())),
    };
    let mut report = session.report;
    if cli.timings {
        report.timings_ms = Some(session.timings);
    }
    let exit_code = if exit_code == EXIT_OK && !report.cross_checks_pass() {
        EXIT_MISMATCH
    } else {
        exit_code
    };
    Ok(Outcome { report, exit_code })
}

struct Session {
    report: RunReport,
    timings: BTreeMap<String, f64>,
    memo_cap: Option<usize>,
}

fn labels(g: &Graph, s: VertexSet) -> LabelSet {
    g.set_labels(s)
}

fn label_sets(g: &Graph, sets: &[VertexSet]) -> Vec<LabelSet> {
    sets.iter().map(|&s| labels(g, s)).collect()
}

fn entries(t: &BettiTable) -> Vec<BettiEntry> {
    t.entries()
        .iter()
        .map(|(&(i, j), &v)| BettiEntry { i, j, v })
        .collect()
}

fn resolve_vertex(g: &Graph, label: &str) -> Result<usize, CliError> {
    g.vertex_by_label(label)
        .ok_or_else(|| CliError::Usage(format!("unknown vertex `{label}`")))
}

pub fn pivot_rule(g: &Graph, args: &PivotArgs) -> Result<PivotRule, CliError> {
    Ok(match args.pivot.as_str() {
        "min" => PivotRule::min_index(),
        "max" => PivotRule::max_index(),
        "maxdeg" => PivotRule::max_degree(),
        list => {
            let priority = list
                .split(',')
                .map(|l| resolve_vertex(g, l.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            PivotRule::with_priority(priority, args.fallback.into())
        }
    })
}

fn describe_pivot(g: &Graph, rule: &PivotRule) -> String {
    let fallback = match rule.fallback {
        PivotFallback::MinIndex => "min",
        PivotFallback::MaxIndex => "max",
        PivotFallback::MaxDegree => "maxdeg",
    };
    if rule.priority.is_empty() {
        return fallback.to_string();
    }
    let list: Vec<String> = rule.priority.iter().map(|&v| g.label(v).into_owned()).collect();
    format!("{} then {fallback}", list.join(","))
}

/// Parses `eg;dfg;def` (or `e g; d f g`) into vertex sets.
fn parse_set_list(g: &Graph, text: &str) -> Result<Vec<VertexSet>, CliError> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|word| {
            if word.contains(char::is_whitespace) {
                word.split_whitespace().map(|l| resolve_vertex(g, l)).collect()
            } else if let Some(v) = g.vertex_by_label(word) {
                Ok(VertexSet::singleton(v))
            } else {
                word.chars().map(|c| resolve_vertex(g, &c.to_string())).collect()
            }
        })
        .collect()
}

impl Session {
    fn timed<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        *self.timings.entry(name.to_string()).or_default() += start.elapsed().as_secs_f64() * 1e3;
        out
    }

    fn config(&self, pivot: PivotRule) -> RecursionConfig {
        RecursionConfig {
            pivot,
            memo_cap: self.memo_cap,
        }
    }

    fn cross_check(&mut self, name: &str, pass: bool, detail: Option<String>) {
        self.report.cross_checks.push(CrossCheck {
            name: name.to_string(),
            pass,
            detail,
        });
    }

    /// Records the chordality verdict; false when the graph is not chordal.
    fn chordality(&mut self, g: &Graph) -> bool {
        let verdict = self.timed("chordality", || elimination_ordering(g));
        let chordal = verdict.is_chordal();
        self.report.chordal = Some(chordal);
        if let Chordality::NotChordal(w) = verdict {
            self.report.witness = Some(Witness {
                vertex: g.label(w.vertex).into_owned(),
                non_adjacent: [
                    g.label(w.non_adjacent.0).into_owned(),
                    g.label(w.non_adjacent.1).into_owned(),
                ],
            });
        }
        chordal
    }

    fn dispatch(&mut self, command: &Command, g: &Graph) -> Result<u8, CliError> {
        let chordal = self.chordality(g);
        match command {
            Command::Check(_) => return Ok(EXIT_OK),
            Command::Covers(_) => {
                self.covers(g, chordal)?;
                return Ok(EXIT_OK);
            }
            _ if !chordal => return Ok(EXIT_NOT_CHORDAL),
            _ => {}
        }
        match command {
            Command::Ordering { ordering, method } => {
                self.ordering(g, ordering, *method)?;
            }
            Command::Shelling {
                ordering,
                method,
                verify,
            } => self.shelling(g, ordering, *method, *verify)?,
            Command::Betti {
                ordering,
                betti_method,
                order,
            } => self.betti(g, ordering, *betti_method, *order)?,
            Command::Invariants { pivot, .. } => self.invariants(g, pivot)?,
            Command::Unmixed(_) => self.unmixed(g)?,
            Command::Check(_) | Command::Covers(_) | Command::Selftest { .. } => unreachable!(),
        }
        Ok(EXIT_OK)
    }

    fn covers(&mut self, g: &Graph, chordal: bool) -> Result<(), CliError> {
        let family = if chordal {
            let config = self.config(PivotRule::min_index());
            let rec = self.timed("covers", || minimal_covers_recursive_with(g, &config))?;
            if g.n() <= cover_ideals::covers::BRUTE_FORCE_CAP {
                let brute = self.timed("covers_bruteforce", || minimal_covers_bruteforce(g))?;
                self.cross_check("covers_recursive_vs_bruteforce", brute == rec, None);
            }
            rec
        } else {
            self.timed("covers_bruteforce", || minimal_covers_bruteforce(g))?
        };
        self.report.covers_count = Some(family.len());
        self.report.covers = Some(label_sets(g, family.covers()));
        Ok(())
    }

    fn build_ordering(
        &mut self,
        g: &Graph,
        args: &OrderingArgs,
        method: OrderKind,
    ) -> Result<MonomialOrdering, CliError> {
        let rule = pivot_rule(g, &args.pivot)?;
        let config = self.config(rule.clone());
        let step = args.outer_order.is_some() || args.deletion_order.is_some();
        let ordering = match method {
            OrderKind::Vv if step => {
                return Err(CliError::Usage(
                    "--outer-order and --deletion-order apply to --order fvt".into(),
                ))
            }
            OrderKind::Vv => self.timed("ordering", || vv_ordering_with(g, &config))?,
            OrderKind::Fvt if step => {
                let (Some(outer), Some(deleted)) = (&args.outer_order, &args.deletion_order) else {
                    return Err(CliError::Usage(
                        "--outer-order and --deletion-order must be given together".into(),
                    ));
                };
                let Some(&x) = rule.priority.first() else {
                    return Err(CliError::Usage(
                        "supplied sub-orderings need --pivot naming a vertex".into(),
                    ));
                };
                let outer = parse_set_list(g, outer)?;
                let deleted = parse_set_list(g, deleted)?;
                self.timed("ordering", || fvt_step(g, x, &outer, &deleted))?
            }
            OrderKind::Fvt => self.timed("ordering", || fvt_ordering_with(g, &config))?,
        };
        Ok(ordering)
    }

    fn ordering(
        &mut self,
        g: &Graph,
        args: &OrderingArgs,
        method: OrderKind,
    ) -> Result<MonomialOrdering, CliError> {
        let ordering = self.build_ordering(g, args, method)?;
        let verdict = self.timed("verify", || verify_linear_quotients(ordering.gens()))?;
        let colon_counts = match &verdict {
            LqVerdict::Linear { colon_counts } => colon_counts.clone(),
            LqVerdict::Fails { earlier, position } => {
                let detail = format!("generator {position} fails against generator {earlier}");
                self.cross_check("linear_quotients", false, Some(detail));
                Vec::new()
            }
        };
        if verdict.is_linear() {
            self.cross_check("linear_quotients", true, None);
        }
        let pivot = ordering
            .pivot_rule()
            .map(|r| describe_pivot(g, r))
            .unwrap_or_else(|| "user".into());
        self.report.ordering = Some(OrderingReport {
            method: ordering.method().to_string(),
            pivot,
            gens: label_sets(g, ordering.gens()),
            colon_counts,
        });
        Ok(ordering)
    }

    fn shelling(
        &mut self,
        g: &Graph,
        args: &OrderingArgs,
        method: OrderKind,
        verify: bool,
    ) -> Result<(), CliError> {
        let ordering = self.ordering(g, args, method)?;
        let shelling = shelling_from_ordering(&ordering, g.n());
        let verified = if verify {
            let ok = self.timed("verify_shelling", || verify_shelling(&shelling))?.is_shelling();
            let linear = self.report.cross_checks.iter().all(|c| c.pass);
            self.cross_check("shelling", ok, None);
            self.cross_check("shelling_matches_linear_quotients", ok == linear, None);
            Some(ok)
        } else {
            None
        };
        self.report.shelling = Some(ShellingReport {
            facets: label_sets(g, &shelling.facets),
            verified,
        });
        Ok(())
    }

    fn betti(
        &mut self,
        g: &Graph,
        args: &OrderingArgs,
        method: BettiKind,
        order: OrderKind,
    ) -> Result<(), CliError> {
        let mut tables: Vec<(String, BettiTable)> = Vec::new();
        let want = |k: BettiKind| method == k || method == BettiKind::All;
        if want(BettiKind::Lq) {
            let ordering = self.build_ordering(g, args, order)?;
            let t = self.timed("betti_lq", || betti_from_ordering(&ordering))?;
            tables.push((format!("lq_{}", ordering.method()), t));
        }
        if want(BettiKind::Recursive) {
            let config = self.config(pivot_rule(g, &args.pivot)?);
            let t = self.timed("betti_recursive", || graded_recursive_with(g, &config))?;
            tables.push(("recursive".into(), t));
        }
        if method == BettiKind::Oracle || (method == BettiKind::All && g.n() <= HOCHSTER_VERTEX_CAP) {
            let t = self.timed("betti_oracle", || -> Result<BettiTable, CliError> {
                let covers = minimal_covers_bruteforce(g)?;
                Ok(hochster_betti(covers.covers(), g.n())?)
            })?;
            tables.push(("oracle".into(), t));
        }
        if tables.len() > 1 {
            let agree = tables.windows(2).all(|w| w[0].1.same_entries(&w[1].1));
            let names: Vec<&str> = tables.iter().map(|(n, _)| n.as_str()).collect();
            self.cross_check("betti_agreement", agree, Some(names.join(",")));
            self.report.betti_by_method = Some(
                tables
                    .iter()
                    .map(|(name, t)| (name.clone(), entries(t)))
                    .collect(),
            );
        }
        let (_, first) = &tables[0];
        self.report.betti = Some(entries(first));
        self.report.totals = Some(first.totals());
        Ok(())
    }

    fn invariants(&mut self, g: &Graph, pivot: &PivotArgs) -> Result<(), CliError> {
        let config = self.config(pivot_rule(g, pivot)?);
        let table = self.timed("betti_recursive", || graded_recursive_with(g, &config))?;
        let (core, _) = g.without_isolated();
        let im = self.timed("induced_matching", || induced_matching_number(&core))?;
        let pd = table.pd().expect("nonzero ideal has generators");
        self.cross_check("pd_equals_im", pd == im, None);
        self.report.invariants = Some(InvariantsReport {
            pd,
            im,
            reg_edge_ideal: pd + 1,
            b0: table.total(0),
        });
        self.report.betti = Some(entries(&table));
        Ok(())
    }

    fn unmixed(&mut self, g: &Graph) -> Result<(), CliError> {
        let (core, map) = g.without_isolated();
        if core.n() == 0 {
            return Err(cover_ideals::Error::NoEdges.into());
        }
        let cert = self.timed("unmixed", || unmixed_certificate(&core))?;
        // free facets back in the original indices
        let back: Vec<usize> = {
            let mut back = vec![0; core.n()];
            for (old, new) in map.iter().enumerate() {
                if let Some(new) = new {
                    back[*new] = old;
                }
            }
            back
        };
        let free_facets = cert
            .free_facets
            .iter()
            .map(|f| labels(g, f.iter().map(|v| back[v]).collect()))
            .collect();
        let mut report = UnmixedReport {
            is_unmixed: cert.is_unmixed,
            free_facets,
            closed_form: None,
            not_applicable: None,
        };
        match unmixed_1dim_betti(g)? {
            UnmixedBetti::Applicable { b0, b1, b2, .. } => {
                report.closed_form = Some([b0 as i64, b1, b2]);
                if core.n() <= HOCHSTER_VERTEX_CAP {
                    let covers = minimal_covers_bruteforce(&core)?;
                    let truth = hochster_betti(covers.covers(), core.n())?.totals();
                    let expected: Vec<u64> = [b0 as i64, b1, b2]
                        .into_iter()
                        .filter(|&b| b > 0)
                        .map(|b| b as u64)
                        .collect();
                    self.cross_check("closed_form_vs_oracle", truth == expected, None);
                }
            }
            UnmixedBetti::NotApplicable { reason } => report.not_applicable = Some(reason),
        }
        self.report.unmixed = Some(report);
        Ok(())
    }

    fn selftest(&mut self, max_n: usize, cases: usize, seed: u64) -> Result<u8, CliError> {
        if !(2..=HOCHSTER_VERTEX_CAP).contains(&max_n) {
            return Err(CliError::Usage(format!(
                "--n must lie in 2..={HOCHSTER_VERTEX_CAP}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = Vec::new();
        let config = self.config(PivotRule::min_index());
        for case in 0..cases {
            let n = rng.gen_range(2..=max_n);
            let connected = rng.gen_bool(0.8);
            let g = random_chordal(&mut rng, n, connected);
            if g.is_edgeless() {
                continue;
            }
            let problems = self.timed("selftest", || check_all(&g, &config))?;
            failures.extend(
                problems
                    .into_iter()
                    .map(|p| format!("case {case} edges {:?}: {p}", g.edges())),
            );
        }
        self.cross_check("selftest", failures.is_empty(), None);
        self.report.selftest = Some(SelftestReport {
            max_n,
            cases,
            seed,
            failures,
        });
        Ok(EXIT_OK)
    }
}

/// Every route through the library on one chordal graph; returns the
/// disagreements found.
fn check_all(g: &Graph, config: &RecursionConfig) -> Result<Vec<String>, CliError> {
    let mut problems = Vec::new();
    let rec_covers = minimal_covers_recursive_with(g, config)?;
    if rec_covers != minimal_covers_bruteforce(g)? {
        problems.push("recursive covers differ from brute force".to_string());
    }
    let truth = hochster_betti(rec_covers.covers(), g.n())?;
    let vv = vv_ordering_with(g, config)?;
    let fvt = fvt_ordering_with(g, config)?;
    let candidates = [
        ("recursive", graded_recursive_with(g, config)?),
        ("vv", betti_from_ordering(&vv)?),
        ("fvt", betti_from_ordering(&fvt)?),
    ];
    for (name, t) in candidates {
        if !t.same_entries(&truth) {
            problems.push(format!("{name} Betti table differs from the oracle"));
        }
    }
    for o in [&vv, &fvt] {
        let s = shelling_from_ordering(o, g.n());
        if !verify_shelling(&s)?.is_shelling() {
            problems.push(format!("{} ordering does not give a shelling", o.method()));
        }
    }
    let (core, _) = g.without_isolated();
    let im = induced_matching_number(&core)?;
    if truth.pd() != Some(im) {
        problems.push(format!("pd {:?} differs from induced matching number {im}", truth.pd()));
    }
    Ok(problems)
}
