//! Command line front end. Every subcommand produces a [`Report`] that is
//! rendered deterministically, so repeated runs with the same arguments give
//! byte-identical output in both text and JSON formats.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::dd::{enumerate_an_dn, enumerate_na1, exclude_index_five, DdCandidate};
use crate::jacobi::ez::{ez_generator, WeakGenerator};
use crate::jacobi::JacobiExpansion;
use crate::lattice::{build_named, IntegerLattice, NamedFamily, ReflectiveKind};
use crate::qseries::{delta, eisenstein, EisensteinKind, QSeries};
use crate::rat::{render, ri};
use crate::reflective::{
    check_tn, derive_divisor, rank_classification, weight_prime_level, weight_two_reflective,
    Derivation,
};
use crate::report::{Node, Report};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "jacobi-forms",
    about = "exact computations with Jacobi forms of lattice index",
    disable_version_flag = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassifyKind {
    /// Forms whose divisor is supported on order-two cosets.
    TwoReflective,
    /// Forms on a lattice of prime level, divisor on isotropic cosets.
    Prime,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DdChoice {
    Na1,
    AnDn,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a lattice: rank, determinant, level, root and coset counts.
    Lattice {
        /// Lattice description such as "E8", "2E8+A1", "A2+A2".
        #[arg(long)]
        family: String,
        /// Rescale the quadratic form by this factor.
        #[arg(long, default_value_t = 1)]
        m: i64,
    },
    /// Build a Jacobi form from a formula and check its key identities.
    Identity {
        /// Formula, e.g. "phi01" or "E41 x thetaE8 x thetaE8 / Delta".
        #[arg(long)]
        form: String,
        /// Number of Fourier layers kept past the pole.
        #[arg(long, default_value_t = 2)]
        trunc: i64,
        /// Write the full expansion to this path.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Rank-by-rank classification tables.
    Classify {
        #[arg(long, value_enum)]
        kind: ClassifyKind,
        /// Level, required when --kind prime.
        #[arg(long)]
        p: Option<i64>,
    },
    /// Obstruction check for the family 2E8 + <2n>.
    Tn {
        #[arg(long)]
        n: i64,
    },
    /// Enumerate diagonal divisor configurations.
    Dd {
        /// Restrict to one family of tables.
        #[arg(long, value_enum)]
        family: Option<DdChoice>,
    },
}

/// Entry point used by the binary. Returns the process exit code:
/// 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let report = match dispatch(&cli.command) {
        Ok(report) => report,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            return 2;
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    match cli.format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", report.render_json()),
    }
    0
}

enum Failure {
    /// Malformed invocation: bad grammar in --family or --form, missing --p.
    Usage(String),
    /// Well-formed request that the mathematics rejects.
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn dispatch(command: &Command) -> std::result::Result<Report, Failure> {
    match command {
        Command::Lattice { family, m } => cmd_lattice(family, *m),
        Command::Identity { form, trunc, dump } => cmd_identity(form, *trunc, dump.as_deref()),
        Command::Classify { kind, p } => cmd_classify(*kind, *p),
        Command::Tn { n } => Ok(cmd_tn(*n)?),
        Command::Dd { family } => Ok(cmd_dd(*family)?),
    }
}

// --- lattice description grammar ------------------------------------------

/// Parses "2E8+A1" style descriptions: '+'-separated summands, each an
/// optional repeat count followed by E8, A<n> or D<n>.
fn parse_family(spec: &str) -> std::result::Result<IntegerLattice, Failure> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Failure::Usage("empty lattice description".into()));
    }
    let mut total: Option<IntegerLattice> = None;
    for part in compact.split('+') {
        let (count, name) = split_repeat_count(part)?;
        let summand = build_summand(name)?;
        for _ in 0..count {
            total = Some(match total.take() {
                None => summand.clone(),
                Some(t) => t.direct_sum(&summand),
            });
        }
    }
    Ok(total.expect("at least one summand"))
}

fn split_repeat_count(part: &str) -> std::result::Result<(u32, &str), Failure> {
    let digits = part.len() - part.trim_start_matches(|c: char| c.is_ascii_digit()).len();
    let count = if digits == 0 {
        1
    } else {
        part[..digits]
            .parse::<u32>()
            .map_err(|_| Failure::Usage(format!("bad repeat count in {part:?}")))?
    };
    if count == 0 {
        return Err(Failure::Usage(format!("repeat count 0 in {part:?}")));
    }
    Ok((count, &part[digits..]))
}

fn build_summand(name: &str) -> std::result::Result<IntegerLattice, Failure> {
    let fail = || Failure::Usage(format!("unknown lattice {name:?}; expected E8, A<n> or D<n>"));
    if name == "E8" {
        return Ok(build_named(NamedFamily::E8, 8, 1)?);
    }
    let (family, rest) = match name.split_at_checked(1) {
        Some(("A", rest)) => (NamedFamily::A, rest),
        Some(("D", rest)) => (NamedFamily::D, rest),
        _ => return Err(fail()),
    };
    let n: usize = rest.parse().map_err(|_| fail())?;
    Ok(build_named(family, n, 1)?)
}

// --- formula grammar --------------------------------------------------------

enum ScalarTok {
    E4,
    E6,
    G2,
    Delta,
}

enum JacobiTok {
    Phi01,
    PhiM21,
    E41,
    ThetaE8,
    ThetaL(String),
}

/// One tensor factor: scalar prefactors times a single Jacobi generator.
struct Factor {
    scalars: Vec<ScalarTok>,
    jacobi: JacobiTok,
}

/// Splits a formula like "E4*E41 x thetaE8 / Delta" into tensor factors and
/// a count of trailing Delta divisions. Whitespace is ignored everywhere.
fn parse_form(spec: &str) -> std::result::Result<(Vec<Factor>, u32), Failure> {
    let mut compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let mut deltas = 0u32;
    while let Some(head) = compact.strip_suffix("/Delta") {
        compact = head.to_string();
        deltas += 1;
    }
    if compact.contains('/') {
        return Err(Failure::Usage(
            "division is only allowed as a trailing /Delta".into(),
        ));
    }
    if compact.is_empty() {
        return Err(Failure::Usage("empty formula".into()));
    }
    let mut factors = Vec::new();
    for factor in compact.split('x') {
        let mut scalars = Vec::new();
        let mut jacobi = None;
        for token in factor.split('*') {
            match token {
                "E4" => scalars.push(ScalarTok::E4),
                "E6" => scalars.push(ScalarTok::E6),
                "G2" => scalars.push(ScalarTok::G2),
                "Delta" => scalars.push(ScalarTok::Delta),
                "phi01" => set_jacobi(&mut jacobi, JacobiTok::Phi01, factor)?,
                "phim21" => set_jacobi(&mut jacobi, JacobiTok::PhiM21, factor)?,
                "E41" => set_jacobi(&mut jacobi, JacobiTok::E41, factor)?,
                "thetaE8" => set_jacobi(&mut jacobi, JacobiTok::ThetaE8, factor)?,
                _ => {
                    let family = token
                        .strip_prefix("thetaL(")
                        .and_then(|rest| rest.strip_suffix(')'))
                        .ok_or_else(|| Failure::Usage(format!("unknown token {token:?}")))?;
                    set_jacobi(&mut jacobi, JacobiTok::ThetaL(family.to_string()), factor)?;
                }
            }
        }
        let jacobi = jacobi.ok_or_else(|| {
            Failure::Usage(format!("tensor factor {factor:?} has no Jacobi generator"))
        })?;
        factors.push(Factor { scalars, jacobi });
    }
    Ok((factors, deltas))
}

fn set_jacobi(
    slot: &mut Option<JacobiTok>,
    token: JacobiTok,
    factor: &str,
) -> std::result::Result<(), Failure> {
    if slot.is_some() {
        return Err(Failure::Usage(format!(
            "tensor factor {factor:?} has more than one Jacobi generator; separate them with x"
        )));
    }
    *slot = Some(token);
    Ok(())
}

fn build_scalar(token: &ScalarTok, trunc: i64) -> Result<QSeries> {
    match token {
        ScalarTok::E4 => eisenstein(EisensteinKind::E4, trunc),
        ScalarTok::E6 => eisenstein(EisensteinKind::E6, trunc),
        ScalarTok::G2 => eisenstein(EisensteinKind::G2, trunc),
        ScalarTok::Delta => delta(trunc, false),
    }
}

fn build_jacobi(token: &JacobiTok, trunc: i64) -> std::result::Result<JacobiExpansion, Failure> {
    match token {
        JacobiTok::Phi01 => Ok(ez_generator(WeakGenerator::Phi01, trunc)?),
        JacobiTok::PhiM21 => Ok(ez_generator(WeakGenerator::PhiM21, trunc)?),
        JacobiTok::E41 => Ok(ez_generator(WeakGenerator::E41, trunc)?),
        JacobiTok::ThetaE8 => Ok(JacobiExpansion::theta_series(
            &build_named(NamedFamily::E8, 8, 1)?,
            trunc,
        )?),
        JacobiTok::ThetaL(family) => {
            Ok(JacobiExpansion::theta_series(&parse_family(family)?, trunc)?)
        }
    }
}

/// Builds the expansion a formula describes, sized so that after all the
/// window-shrinking products the result still holds `trunc` layers past its
/// pole. Scalar factors and 1/Delta each cost one layer at the top.
fn build_form(spec: &str, trunc: i64) -> std::result::Result<JacobiExpansion, Failure> {
    if trunc < 1 {
        return Err(Failure::Domain(Error::WindowTooSmall { trunc }));
    }
    let (factors, deltas) = parse_form(spec)?;
    let jacobi_trunc = trunc + i64::from(deltas);
    let scalar_trunc = jacobi_trunc + 1;
    let mut value: Option<JacobiExpansion> = None;
    for factor in &factors {
        let mut phi = build_jacobi(&factor.jacobi, jacobi_trunc)?;
        if !factor.scalars.is_empty() {
            let mut series = build_scalar(&factor.scalars[0], scalar_trunc)?;
            for token in &factor.scalars[1..] {
                series = series.mul(&build_scalar(token, scalar_trunc)?);
            }
            phi = phi.mul_scalar(&series)?;
        }
        value = Some(match value.take() {
            None => phi,
            Some(v) => v.tensor(&phi)?,
        });
    }
    let mut phi = value.expect("at least one factor");
    if deltas > 0 {
        let inverse = delta(scalar_trunc, true)?;
        for _ in 0..deltas {
            phi = phi.mul_scalar(&inverse)?;
        }
    }
    Ok(phi)
}

// --- subcommands -------------------------------------------------------------

fn cmd_lattice(family: &str, m: i64) -> std::result::Result<Report, Failure> {
    let lattice = parse_family(family)?;
    let lattice = if m == 1 { lattice } else { lattice.rescale(m)? };
    let (det, level) = lattice.det_and_level();

    let mut results = vec![
        ("label".to_string(), Node::leaf(lattice.label())),
        ("rank".to_string(), Node::leaf(lattice.rank())),
        ("det".to_string(), Node::leaf(&det)),
        ("level".to_string(), Node::leaf(&level)),
        ("roots".to_string(), Node::leaf(lattice.count_roots())),
    ];

    let mut classes = Vec::new();
    for class in lattice.reflective_classes(ReflectiveKind::TwoReflective)? {
        let count = lattice.count_r_mu(class.representative())?;
        classes.push(Node::Map(vec![
            (
                "representative".to_string(),
                Node::leaf(format!("{:?}", class.representative().pairings())),
            ),
            ("r_mu".to_string(), Node::leaf(count)),
        ]));
    }
    results.push(("order_two_cosets".to_string(), Node::List(classes)));

    if let Some(p) = small_prime(&level) {
        let mut classes = Vec::new();
        for class in lattice.reflective_classes(ReflectiveKind::PrimeLevel(p))? {
            let count = lattice.count_c_gamma(&class, p)?;
            classes.push(Node::Map(vec![
                (
                    "representative".to_string(),
                    Node::leaf(format!("{:?}", class.representative().pairings())),
                ),
                ("c_gamma".to_string(), Node::leaf(count)),
            ]));
        }
        results.push((
            "isotropic_cosets".to_string(),
            Node::Map(vec![
                ("p".to_string(), Node::leaf(p)),
                ("classes".to_string(), Node::List(classes)),
            ]),
        ));
    }

    Ok(Report {
        command: "lattice".to_string(),
        inputs: vec![
            ("family".to_string(), family.to_string()),
            ("m".to_string(), m.to_string()),
        ],
        results: Node::Map(results),
        citations: vec!["shell-enumeration".to_string()],
    })
}

/// Level as a small prime, if it is one. Root lattices here have levels far
/// below i64 range, so the conversion is safe.
fn small_prime(level: &crate::rat::Int) -> Option<i64> {
    use num_traits::ToPrimitive;
    let p = level.to_i64()?;
    crate::lattice::is_prime(p).then_some(p)
}

fn cmd_identity(
    form: &str,
    trunc: i64,
    dump: Option<&std::path::Path>,
) -> std::result::Result<Report, Failure> {
    let phi = build_form(form, trunc)?;
    // The constant-term identity only constrains weight-zero forms with a
    // pole confined to l = 0; elsewhere record why it does not apply.
    let residual = match phi.gritsenko_residual() {
        Ok(value) => Node::leaf(render(&value)),
        Err(e) => Node::leaf(format!("not applicable: {e}")),
    };

    let mut results = vec![
        (
            "index".to_string(),
            Node::Map(vec![
                ("label".to_string(), Node::leaf(phi.index().label())),
                ("rank".to_string(), Node::leaf(phi.rank())),
            ]),
        ),
        ("weight".to_string(), Node::leaf(render(&phi.weight()))),
        ("class".to_string(), Node::leaf(phi.classify())),
        ("trunc".to_string(), Node::leaf(phi.trunc())),
        ("q0_identity_residual".to_string(), residual),
    ];

    match divisor_section(&phi) {
        Ok(node) => results.push(("reflective_divisor".to_string(), node)),
        Err(Failure::Domain(e)) => {
            results.push(("reflective_divisor".to_string(), Node::leaf(format!("not derived: {e}"))))
        }
        Err(usage) => return Err(usage),
    }

    if let Some(path) = dump {
        std::fs::write(path, phi.to_dump_string())
            .map_err(|e| Failure::Domain(Error::InvalidInput(format!("cannot write dump: {e}"))))?;
        results.push(("dump".to_string(), Node::leaf(path.display())));
    }

    Ok(Report {
        command: "identity".to_string(),
        inputs: vec![
            ("form".to_string(), form.to_string()),
            ("trunc".to_string(), trunc.to_string()),
        ],
        results: Node::Map(results),
        citations: vec![
            "q0-identity".to_string(),
            "divisor-from-singular-part".to_string(),
            "two-reflective-weight-formula".to_string(),
            "weight-from-constant-term".to_string(),
        ],
    })
}

fn divisor_section(phi: &JacobiExpansion) -> std::result::Result<Node, Failure> {
    let lattice = phi.index();
    let divisor = derive_divisor(phi, ReflectiveKind::TwoReflective)?;
    let weight = weight_two_reflective(lattice, &divisor)?;
    let c00 = phi.coefficient(0, &vec![0; phi.rank()])?;
    let from_constant_term = c00 / ri(2);

    let mut entries = vec![("beta0".to_string(), Node::leaf(divisor.beta0()))];
    let mut classes = Vec::new();
    for (class, beta) in divisor.classes() {
        classes.push(Node::Map(vec![
            (
                "representative".to_string(),
                Node::leaf(format!("{:?}", class.representative().pairings())),
            ),
            ("beta".to_string(), Node::leaf(beta)),
            (
                "r_mu".to_string(),
                Node::leaf(lattice.count_r_mu(class.representative())?),
            ),
        ]));
    }
    entries.push(("classes".to_string(), Node::List(classes)));
    entries.push((
        "lift_weight".to_string(),
        Node::Map(vec![
            ("from_divisor".to_string(), Node::leaf(render(&weight))),
            (
                "from_constant_term".to_string(),
                Node::leaf(render(&from_constant_term)),
            ),
            ("agree".to_string(), Node::leaf(weight == from_constant_term)),
        ]),
    ));
    if let Some(p) = small_prime(&lattice.level()) {
        if let Ok(divisor_p) = derive_divisor(phi, ReflectiveKind::PrimeLevel(p)) {
            let weight_p = weight_prime_level(lattice, p, &divisor_p)?;
            entries.push((
                "prime_level_weight".to_string(),
                Node::Map(vec![
                    ("p".to_string(), Node::leaf(p)),
                    ("weight".to_string(), Node::leaf(render(&weight_p))),
                ]),
            ));
        }
    }
    Ok(Node::Map(entries))
}

fn cmd_classify(kind: ClassifyKind, p: Option<i64>) -> std::result::Result<Report, Failure> {
    let (kind, inputs) = match kind {
        ClassifyKind::TwoReflective => {
            if p.is_some() {
                return Err(Failure::Usage("--p only applies to --kind prime".into()));
            }
            (
                ReflectiveKind::TwoReflective,
                vec![("kind".to_string(), "two-reflective".to_string())],
            )
        }
        ClassifyKind::Prime => {
            let p = p.ok_or_else(|| Failure::Usage("--kind prime requires --p".into()))?;
            (
                ReflectiveKind::PrimeLevel(p),
                vec![
                    ("kind".to_string(), "prime".to_string()),
                    ("p".to_string(), p.to_string()),
                ],
            )
        }
    };
    let table = rank_classification(kind)?;

    let mut rows = Vec::new();
    for row in &table.rows {
        let (status, detail, citation) = match &row.derivation {
            Derivation::Derived { checks } => (
                "derived",
                (
                    "checks".to_string(),
                    Node::List(checks.iter().map(Node::leaf).collect()),
                ),
                "exact-recomputation",
            ),
            Derivation::Documented { note } => {
                ("documented", ("note".to_string(), Node::leaf(note)), "external-result")
            }
        };
        rows.push(Node::Map(vec![
            ("ranks".to_string(), Node::leaf(&row.ranks)),
            ("conclusion".to_string(), Node::leaf(&row.conclusion)),
            ("status".to_string(), Node::leaf(status)),
            detail,
            ("citations".to_string(), Node::List(vec![Node::leaf(citation)])),
        ]));
    }

    Ok(Report {
        command: "classify".to_string(),
        inputs,
        results: Node::Map(vec![("rows".to_string(), Node::List(rows))]),
        citations: vec![
            "singular-weight-bound".to_string(),
            "heat-elimination-chain".to_string(),
            "complete-divisor-analysis".to_string(),
            "valence-inequality".to_string(),
        ],
    })
}

fn cmd_tn(n: i64) -> Result<Report> {
    let report = check_tn(n)?;
    Ok(Report {
        command: "tn".to_string(),
        inputs: vec![("n".to_string(), n.to_string())],
        results: Node::Map(vec![
            ("n".to_string(), Node::leaf(report.n)),
            ("roots".to_string(), Node::leaf(report.roots)),
            ("r_mu_total".to_string(), Node::leaf(report.r_mu_total)),
            (
                "formula_weight_per_beta0".to_string(),
                Node::leaf(render(&report.formula_weight_per_beta0)),
            ),
            (
                "required_weight_per_beta0".to_string(),
                Node::leaf(render(&report.required_weight_per_beta0)),
            ),
            ("obstructed".to_string(), Node::leaf(report.obstructed)),
        ]),
        citations: vec![
            "two-reflective-weight-formula".to_string(),
            "heat-elimination-chain".to_string(),
        ],
    })
}

fn candidate_node(c: &DdCandidate) -> Node {
    let mut entries = vec![
        ("family".to_string(), Node::leaf(c.family)),
        ("n".to_string(), Node::leaf(c.n)),
        ("m".to_string(), Node::leaf(c.m)),
        ("c".to_string(), Node::leaf(c.c)),
        ("k".to_string(), Node::leaf(render(&c.k))),
        ("admissible".to_string(), Node::leaf(c.admissible)),
    ];
    if let Some(reason) = &c.exclusion_reason {
        entries.push(("reason".to_string(), Node::leaf(reason)));
    }
    if let Some(alt) = &c.alt_weight {
        entries.push(("k_eight_vector_convention".to_string(), Node::leaf(render(alt))));
    }
    Node::Map(entries)
}

fn cmd_dd(family: Option<DdChoice>) -> Result<Report> {
    let mut results = Vec::new();

    if family != Some(DdChoice::AnDn) {
        let candidates = enumerate_na1(5)?;
        let exclusion = exclude_index_five()?;
        let q0: Vec<Node> = exclusion
            .q0
            .iter()
            .map(|(r, value)| {
                Node::Map(vec![
                    ("zeta_power".to_string(), Node::leaf(r)),
                    ("coefficient".to_string(), Node::leaf(render(value))),
                ])
            })
            .collect();
        let counterparts: Vec<Node> = exclusion
            .counterparts_nonnegative
            .iter()
            .map(|(m, ok)| {
                Node::Map(vec![
                    ("m".to_string(), Node::leaf(m)),
                    ("nonnegative".to_string(), Node::leaf(ok)),
                ])
            })
            .collect();
        results.push((
            "na1".to_string(),
            Node::Map(vec![
                (
                    "candidates".to_string(),
                    Node::List(candidates.iter().map(candidate_node).collect()),
                ),
                (
                    "index_five_exclusion".to_string(),
                    Node::Map(vec![
                        ("q0".to_string(), Node::List(q0)),
                        (
                            "q1_zeta5".to_string(),
                            Node::leaf(render(&exclusion.q1_zeta5)),
                        ),
                        ("verdict".to_string(), Node::leaf(&exclusion.verdict)),
                        ("index_le_4_counterparts".to_string(), Node::List(counterparts)),
                    ]),
                ),
            ]),
        ));
    }

    if family != Some(DdChoice::Na1) {
        let candidates = enumerate_an_dn()?;
        results.push((
            "an_dn".to_string(),
            Node::Map(vec![(
                "candidates".to_string(),
                Node::List(candidates.iter().map(candidate_node).collect()),
            )]),
        ));
    }

    Ok(Report {
        command: "dd".to_string(),
        inputs: match family {
            None => vec![],
            Some(DdChoice::Na1) => vec![("family".to_string(), "na1".to_string())],
            Some(DdChoice::AnDn) => vec![("family".to_string(), "an-dn".to_string())],
        },
        results: Node::Map(results),
        citations: vec![
            "diagonal-divisor-weights".to_string(),
            "index-five-exclusion".to_string(),
        ],
    })
}
