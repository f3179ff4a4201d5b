//! Command dispatch: builds report sections from the core library.

use unrep_core::catalog;
use unrep_core::clifford::{
    clifford_monoid_unreps, component_underrep_existence, decompose, theorem_c_check_with,
};
use unrep_core::corpus::candidate_bijections;
use unrep_core::heap::{
    beta_square_check, centralizer, epsilon_torsor_witness, group_from_identity, heap_axioms_check,
    is_isomorphic, pseudounit_duality_check, pseudounits, theorem_centralizer_check, HeapCarrier,
};
use unrep_core::unrep::{
    enumerate_maps, enumerate_unrep_maps_parallel, idempotent_determination_check, Strategy,
    BRUTEFORCE_MAX_DEGREE,
};
use unrep_core::{
    induced_table, is_faithful, monoid_unreps, represent, verify_action_hom, Error, MulTable,
    Result, TransSemigroup, UnrepMap, Unrepresentation,
};

use crate::input::{InputDocument, Source, Subject};
use crate::report::*;

/// Samples drawn for the Theorem C sweep when the degree is too large to
/// check every bijection.
pub const THEOREM_C_SAMPLES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Unreps,
    Heap,
    Centralizer,
    Pseudounits,
    Clifford,
    CheckAll,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Unreps => "unreps",
            Command::Heap => "heap",
            Command::Centralizer => "centralizer",
            Command::Pseudounits => "pseudounits",
            Command::Clifford => "clifford",
            Command::CheckAll => "check-all",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    /// Force brute-force enumeration.
    pub oracle: bool,
    pub jobs: usize,
    /// Heap element used as the group identity.
    pub identity: usize,
    pub cap: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            oracle: false,
            jobs: 1,
            identity: 0,
            cap: unrep_core::DEFAULT_CLOSURE_CAP,
            seed: 0,
        }
    }
}

/// Process exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capacity { .. } => 2,
        Error::Invariant(_) | Error::TheoremViolation(_) => 3,
        _ => 1,
    }
}

pub fn run(command: Command, doc: &InputDocument, opts: &Options) -> Result<Report> {
    let subject = doc.subject(opts.cap)?;
    let s = &subject.semigroup;
    let mut report = Report::new(command.name(), echo(doc, &subject));
    report.classification = Some(match &subject.table {
        Some(t) => t.classify(),
        None => s.classify(),
    });

    match command {
        Command::Analyze => {}
        Command::Unreps => {
            report.unreps = Some(unreps_section(s, opts)?.0);
        }
        Command::Heap => {
            let (section, unreps) = unreps_section(s, opts)?;
            report.heap = Some(heap_section(s, &maps_of(&unreps), opts.identity)?);
            report.verdicts.push(Verdict::new(
                "heap_axioms",
                report.heap.as_ref().unwrap().axioms,
                "",
            ));
            report.unreps = Some(section);
        }
        Command::Centralizer => {
            let (section, unreps) = unreps_section(s, opts)?;
            report.centralizer = Some(centralizer_section(s, &maps_of(&unreps), opts.identity)?);
            report.unreps = Some(section);
        }
        Command::Pseudounits => {
            report.pseudounits = Some(pseudounit_section(&abstract_table(&subject)?)?);
        }
        Command::Clifford => {
            let section = clifford_section(s, opts)?;
            if let Some(sweep) = &section.theorem_c {
                report.verdicts.push(Verdict::new(
                    "theorem_c",
                    sweep.disagreements.is_empty(),
                    format!("{} bijections", sweep.bijections_checked),
                ));
            }
            report.clifford = Some(section);
        }
        Command::CheckAll => {
            let (section, unreps) = unreps_section(s, opts)?;
            report.verdicts = check_all(&subject, &unreps, opts)?;
            report.unreps = Some(section);
        }
    }
    Ok(report)
}

fn echo(doc: &InputDocument, subject: &Subject) -> InputEcho {
    let (kind, labels) = match &doc.source {
        Source::Generators { .. } => ("generators", None),
        Source::Table { labels, .. } => ("table", labels.clone()),
    };
    InputEcho {
        kind: kind.to_string(),
        degree: subject.semigroup.degree(),
        elements: subject
            .semigroup
            .elements()
            .iter()
            .map(|t| t.images().to_vec())
            .collect(),
        labels,
        faithful: subject.faithful,
    }
}

fn maps_of(unreps: &[Unrepresentation]) -> Vec<UnrepMap> {
    unreps.iter().map(|u| u.map.clone()).collect()
}

fn unreps_section(
    s: &TransSemigroup,
    opts: &Options,
) -> Result<(UnrepSection, Vec<Unrepresentation>)> {
    let (route, maps) = if opts.oracle {
        ("bruteforce", enumerate_maps(s, Strategy::BruteForce)?)
    } else if opts.jobs > 1 {
        (
            "parallel-backtrack",
            enumerate_unrep_maps_parallel(s, opts.jobs),
        )
    } else if s.is_monoid() {
        ("monoid", enumerate_maps(s, Strategy::Monoid)?)
    } else if s.classify().is_inverse {
        ("idempotent", enumerate_maps(s, Strategy::Idempotent)?)
    } else {
        ("backtrack", enumerate_maps(s, Strategy::Backtrack)?)
    };
    let unreps = maps
        .iter()
        .map(|m| induced_table(s, m))
        .collect::<Result<Vec<_>>>()?;
    let section = UnrepSection {
        precheck: s.len() == s.degree(),
        route: route.to_string(),
        count: unreps.len(),
        maps: unreps.iter().map(|u| u.map.phi().to_vec()).collect(),
        induced: unreps.iter().map(|u| u.induced.rows()).collect(),
    };
    Ok((section, unreps))
}

fn heap_of(s: &TransSemigroup, maps: &[UnrepMap]) -> Result<HeapCarrier> {
    if maps.is_empty() {
        return Err(Error::Precondition(
            "the semigroup has no unrepresentations".into(),
        ));
    }
    HeapCarrier::new(s, maps.to_vec())
}

fn check_identity(identity: usize, heap: &HeapCarrier) -> Result<()> {
    if identity >= heap.len() {
        return Err(Error::Input(format!(
            "identity index {identity} outside a heap of {} elements",
            heap.len()
        )));
    }
    Ok(())
}

fn heap_section(s: &TransSemigroup, maps: &[UnrepMap], identity: usize) -> Result<HeapSection> {
    let h = heap_of(s, maps)?;
    check_identity(identity, &h)?;
    let g = group_from_identity(&h, identity)?;
    Ok(HeapSection {
        size: h.len(),
        axioms: heap_axioms_check(&h),
        identity,
        group_table: g.rows(),
        abelian: g.is_abelian(),
        cyclic: g.is_cyclic(),
        order_profile: g.order_profile(),
    })
}

fn centralizer_section(
    s: &TransSemigroup,
    maps: &[UnrepMap],
    identity: usize,
) -> Result<CentralizerSection> {
    let c = centralizer(s);
    let images = |v: &[unrep_core::Transformation]| v.iter().map(|t| t.images().to_vec()).collect();
    let (heap_isomorphism, explicit_map) = if maps.is_empty() {
        (None, None)
    } else {
        check_identity(identity, &heap_of(s, maps)?)?;
        let v = theorem_centralizer_check(s, identity)?;
        (Some(v.isomorphism), Some(v.explicit_map))
    };
    Ok(CentralizerSection {
        size: c.all_elements.len(),
        elements: images(&c.all_elements),
        invertible: images(&c.invertible),
        invertible_group_table: c.invertible_group()?.rows(),
        heap_isomorphism,
        explicit_map,
    })
}

/// The input table, or the composition table of `S` for generator input.
fn abstract_table(subject: &Subject) -> Result<MulTable> {
    match &subject.table {
        Some(t) => Ok(t.clone()),
        None => MulTable::new(subject.semigroup.comp_rows()),
    }
}

fn pseudounit_section(t: &MulTable) -> Result<PseudounitSection> {
    let p = pseudounits(t)?;
    let one = t.identity();
    Ok(PseudounitSection {
        count: p.len(),
        alphas: p.elements.iter().map(|a| a.alpha().to_vec()).collect(),
        group_table: p.group.rows(),
        unit_count: one.map(|_| t.units().len()),
        duality_images: one.map(|u| p.elements.iter().map(|a| a.apply(u)).collect()),
    })
}

fn clifford_section(s: &TransSemigroup, opts: &Options) -> Result<CliffordSection> {
    let dec = decompose(s)?;
    let n = s.degree();
    let theorem_c = if s.len() == n {
        let exhaustive = n <= 7;
        let mut candidates = candidate_bijections(n, THEOREM_C_SAMPLES, opts.seed);
        if !exhaustive {
            // sampled bijections are almost never unrepresentations
            candidates.extend(
                enumerate_maps(s, Strategy::Auto)?
                    .iter()
                    .map(|m| m.phi().to_vec()),
            );
        }
        let mut action_homs = 0;
        let mut disagreements = Vec::new();
        for phi in &candidates {
            let v = theorem_c_check_with(s, &dec, phi)?;
            action_homs += usize::from(v.action_hom);
            if !v.agree() {
                disagreements.push(phi.clone());
            }
        }
        Some(TheoremCSweep {
            exhaustive,
            seed: (!exhaustive).then_some(opts.seed),
            bijections_checked: candidates.len(),
            action_homs,
            disagreements,
        })
    } else {
        None
    };
    let existence = if s.is_monoid() {
        let evaluation_count = clifford_monoid_unreps(s)?.len();
        let components = if s.len() == n && n <= BRUTEFORCE_MAX_DEGREE {
            Some(component_underrep_existence(s)?.per_idempotent)
        } else {
            None
        };
        Some(ExistenceDto {
            evaluation_count,
            components,
        })
    } else {
        None
    };
    Ok(CliffordSection {
        idempotents: dec.idempotents.clone(),
        order_pairs: dec.order_pairs.clone(),
        components: dec
            .idempotents
            .iter()
            .zip(&dec.components)
            .map(|(&e, c)| ComponentDto {
                idempotent: e,
                elements: c.clone(),
            })
            .collect(),
        connecting: dec
            .connecting
            .iter()
            .map(|c| ConnectingMapDto {
                from: c.from,
                to: c.to,
                pairs: c.pairs.clone(),
            })
            .collect(),
        theorem_c,
        existence,
    })
}

/// Collects verdicts. Theorem violations and invariant failures become false
/// verdicts; capacity errors mark a check as not applicable.
struct Verdicts(Vec<Verdict>);

impl Verdicts {
    fn push(&mut self, name: &str, outcome: Result<(bool, String)>) -> Result<()> {
        match outcome {
            Ok((holds, detail)) => self.0.push(Verdict::new(name, holds, detail)),
            Err(e @ (Error::TheoremViolation(_) | Error::Invariant(_))) => {
                self.0.push(Verdict::new(name, false, e.to_string()))
            }
            Err(Error::Capacity { .. }) => {}
            Err(e) => return Err(e),
        }
        Ok(())
    }
}

fn check_all(
    subject: &Subject,
    unreps: &[Unrepresentation],
    opts: &Options,
) -> Result<Vec<Verdict>> {
    let s = &subject.semigroup;
    let n = s.degree();
    let class = s.classify();
    let maps = maps_of(unreps);
    let phis: Vec<Vec<usize>> = maps.iter().map(|m| m.phi().to_vec()).collect();
    let mut v = Verdicts(Vec::new());

    v.push(
        "unreps_are_action_homs",
        Ok((
            phis.iter().all(|p| verify_action_hom(s, p)),
            format!("{} maps", phis.len()),
        )),
    )?;
    v.push(
        "oracle_agreement",
        (|| {
            let oracle = enumerate_maps(s, Strategy::BruteForce)?;
            Ok((oracle == maps, format!("{} by brute force", oracle.len())))
        })(),
    )?;
    v.push(
        "induced_round_trip",
        (|| {
            for u in unreps {
                let back = represent(&u.induced);
                let phi: Vec<usize> = back
                    .rep_map
                    .iter()
                    .map(|&i| s.index_of(back.semigroup.element(i)))
                    .collect::<Option<_>>()
                    .unwrap_or_default();
                if phi != u.map.phi() {
                    return Ok((false, format!("φ = {:?}", u.map.phi())));
                }
            }
            Ok((true, String::new()))
        })(),
    )?;
    if let (Some(t), Some(true)) = (&subject.table, subject.faithful) {
        let hits = unreps
            .iter()
            .filter(|u| u.induced.rows() == t.rows())
            .count();
        v.push(
            "table_recovered",
            Ok((hits == 1, format!("{hits} matching unreps"))),
        )?;
    }
    let table = abstract_table(subject)?;
    let abstract_class = table.classify();
    if abstract_class.is_inverse {
        v.push("inverse_faithful", Ok((is_faithful(&table), String::new())))?;
    }
    if class.is_left_zero && s.len() == n {
        let constants = s == &catalog::constants(n);
        let ok = if constants {
            unreps.len() == 1 && unreps[0].induced == catalog::left_zero_table(n)
        } else {
            unreps.is_empty()
        };
        let detail = format!("constant maps: {constants}, {} unreps", unreps.len());
        v.push("left_zero_law", Ok((ok, detail)))?;
    }
    let single_cycle =
        class.is_group && s.len() == n && s.elements().iter().any(|t| t.is_single_cycle());
    if single_cycle {
        let cyclic = !maps.is_empty()
            && group_from_identity(&heap_of(s, &maps)?, 0).is_ok_and(|g| g.is_cyclic());
        v.push(
            "cyclic_construction",
            Ok((maps.len() == n && cyclic, String::new())),
        )?;
    }
    if !maps.is_empty() {
        let h = heap_of(s, &maps)?;
        check_identity(opts.identity, &h)?;
        v.push(
            "heap_axioms",
            Ok((heap_axioms_check(&h), format!("{} elements", h.len()))),
        )?;
        v.push(
            "heap_identity_independence",
            (|| {
                let base = group_from_identity(&h, opts.identity)?;
                for e in 0..h.len() {
                    if is_isomorphic(&group_from_identity(&h, e)?, &base)?.is_none() {
                        return Ok((false, format!("identity {e}")));
                    }
                }
                Ok((true, String::new()))
            })(),
        )?;
        v.push(
            "centralizer_theorem",
            theorem_centralizer_check(s, opts.identity).map(|r| {
                (
                    true,
                    format!("invertible centralizer of order {}", r.invertible_order),
                )
            }),
        )?;
    }
    if class.is_monoid {
        v.push(
            "monoid_determination",
            (|| {
                let via_identity: Vec<Vec<usize>> = monoid_unreps(s)?
                    .iter()
                    .map(|u| u.map.phi().to_vec())
                    .collect();
                Ok((via_identity == phis, String::new()))
            })(),
        )?;
        if !maps.is_empty() {
            v.push(
                "beta_square",
                beta_square_check(s).map(|r| (r.holds(), format!("{} pairs", r.pairs_checked))),
            )?;
        }
    }
    if abstract_class.is_monoid {
        v.push(
            "pseudounit_duality",
            pseudounit_duality_check(&table)
                .map(|r| (r.holds(), format!("{} pseudounits", r.pseudounit_count))),
        )?;
    }
    if class.is_group && !maps.is_empty() {
        v.push(
            "torsor",
            epsilon_torsor_witness(s).map(|w| match w {
                Some(w) => (w.beta_is_witness && w.torsor, String::new()),
                None => (false, "no intertwining bijection".into()),
            }),
        )?;
    }
    if class.is_inverse && !maps.is_empty() {
        v.push(
            "idempotent_determination",
            (|| {
                let mut checks = 0;
                for m in &maps {
                    let r = idempotent_determination_check(s, m)?;
                    checks += r.checks;
                    if !r.failures.is_empty() {
                        return Ok((
                            false,
                            format!("φ = {:?} fails at {:?}", m.phi(), r.failures),
                        ));
                    }
                }
                let routed = enumerate_maps(s, Strategy::Idempotent)?;
                Ok((routed == maps, format!("{checks} checks")))
            })(),
        )?;
    }
    if class.is_clifford {
        if s.len() == n {
            v.push(
                "theorem_c",
                clifford_section(s, opts).map(|c| {
                    let sweep = c.theorem_c.expect("swept when |S| = n");
                    let detail = format!("{} bijections", sweep.bijections_checked);
                    (sweep.disagreements.is_empty(), detail)
                }),
            )?;
        }
        if class.is_monoid {
            v.push(
                "clifford_existence",
                (|| {
                    let evaluated: Vec<Vec<usize>> = clifford_monoid_unreps(s)?
                        .iter()
                        .map(|u| u.map.phi().to_vec())
                        .collect();
                    let mut ok = evaluated == phis;
                    if s.len() == n && n <= BRUTEFORCE_MAX_DEGREE {
                        ok &= component_underrep_existence(s)?.consistent();
                    }
                    Ok((ok, String::new()))
                })(),
            )?;
        }
    }
    Ok(v.0)
}
