use std::error::Error as StdError;

use affschub::affweyl::display_word;
use affschub::cartan::CartanDocument;
use affschub::gkm::{Localization, Report, Variant};
use affschub::typea::{SymBasis, TypeA};
use affschub::{AffineWeylElement, AffineWeylGroup, Cohomology, FactorizationMode, KTheory, RootSystem, Theory};
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::output::Out;
use crate::{BasisArg, Cli, Command, Common, Family, Identity, Outcome, TheoryArg, VariantArg, VerifyArgs, BUDGET_ENV};

type Res<T> = Result<T, Box<dyn StdError>>;

pub fn run(cli: &Cli) -> Res<Outcome> {
    let c = &cli.common;
    match &cli.command {
        Command::Poly(args) => return poly(c, args),
        Command::Positivity { n, w, max_length } => return positivity(c, *n, w.as_ref().map(|w| w.0.as_slice()), *max_length),
        _ => {}
    }
    let g = build_group(c)?;
    match c.theory {
        TheoryArg::K => run_in::<KTheory>(cli, &g),
        TheoryArg::H => run_in::<Cohomology>(cli, &g),
    }
}

fn build_group(c: &Common) -> Res<AffineWeylGroup> {
    let g = match &c.cartan {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let doc: CartanDocument = serde_json::from_str(&text)?;
            AffineWeylGroup::new(RootSystem::from_document(&doc)?)?
        }
        None => AffineWeylGroup::of_type(&c.cartan_type, c.rank)?,
    };
    Ok(match std::env::var(BUDGET_ENV) {
        Ok(v) => g.with_ball_cap(v.parse().map_err(|e| format!("{BUDGET_ENV}={v:?}: {e}"))?),
        Err(_) => g,
    })
}

fn group_info(g: &AffineWeylGroup) -> Value {
    json!({"type": g.root_system().label(), "rank": g.rank()})
}

fn run_in<T: Theory>(cli: &Cli, g: &AffineWeylGroup) -> Res<Outcome> {
    let c = &cli.common;
    match &cli.command {
        Command::Ball { max_length } => {
            let out = Out { common: c, command: "ball" };
            let ball = g.ball(*max_length)?;
            for x in &ball {
                out.line(format!("{}\tmu={:?}", g.display(x), x.mu.as_slice()));
            }
            let elements: Vec<_> = ball.iter().map(|x| g.to_document(x)).collect();
            out.document(json!({"group": group_info(g), "radius": max_length, "elements": elements}));
            Ok(Outcome::Success)
        }
        Command::Localize { w, max_length, ideal } => {
            let out = Out { common: c, command: "localize" };
            let x = g.from_word(&w.0)?;
            let r = max_length.unwrap_or(g.length(&x));
            let loc = Localization::<T>::new(g, r)?;
            let class = if *ideal { loc.ideal_sheaf(&x, r)? } else { loc.schubert(&x, r)? };
            for p in loc.ball(r)? {
                out.line(format!("{}\t{}", g.display(p), class.get(p)?));
            }
            out.document(json!({"group": group_info(g), "element": g.to_document(&x), "class": class.to_document(&loc)?}));
            Ok(Outcome::Success)
        }
        Command::CoproductTerms { w } => {
            let out = Out { common: c, command: "coproduct-terms" };
            let x = g.from_word(&w.0)?;
            let mode = match c.theory {
                TheoryArg::K => FactorizationMode::Demazure,
                TheoryArg::H => FactorizationMode::LengthAdditive,
            };
            let mut terms = Vec::new();
            for f in g.factorizations(&x, mode, true) {
                let sign = if f.sign > 0 { "+" } else { "-" };
                out.line(format!("{sign} {} | {}", g.display(&f.left), g.display(&f.right)));
                terms.push(json!({"left": g.to_document(&f.left), "right": g.to_document(&f.right), "sign": f.sign}));
            }
            out.document(json!({"group": group_info(g), "element": g.to_document(&x), "mode": mode, "terms": terms}));
            Ok(Outcome::Success)
        }
        Command::Verify(args) => verify::<T>(c, args, g),
        Command::ExpandGrassmannian { w, radius } => {
            let out = Out { common: c, command: "expand-grassmannian" };
            let x = g.from_word(&w.0)?;
            let r = radius.unwrap_or(g.length(&x));
            let loc = Localization::<T>::new(g, r)?;
            let theta = loc.theta(&loc.schubert(&x, r)?)?;
            let e = loc.expand_grassmannian(&theta)?;
            let mut terms = Vec::new();
            for (u, coeff) in e.nonzero() {
                out.line(format!("{}\t{}", g.display(u), coeff));
                terms.push(json!({"element": g.to_document(u), "coeff": coeff}));
            }
            if !e.undetermined.is_empty() {
                let names: Vec<String> = e.undetermined.iter().map(|u| g.display(u)).collect();
                out.line(format!("undetermined\t{}", names.join(" ")));
            }
            let undetermined: Vec<_> = e.undetermined.iter().map(|u| g.to_document(u)).collect();
            out.document(json!({"group": group_info(g), "radius": r, "element": g.to_document(&x),
                "terms": terms, "undetermined": undetermined}));
            Ok(Outcome::Success)
        }
        Command::Peterson { w, max_length } => {
            let out = Out { common: c, command: "peterson" };
            let u = g.from_word(&w.0)?;
            let lu = g.length(&u);
            let support = Localization::<T>::new(g, lu)?.peterson_support_radius(&u)?;
            let r = max_length.unwrap_or(support);
            let loc = Localization::<T>::new(g, r.max(support).max(lu))?;
            let k = loc.peterson_assemble(&u, r)?;
            out.line(k.display(g));
            out.document(json!({"group": group_info(g), "element": g.to_document(&u), "truncation": r,
                "peterson": k.to_document(g)}));
            Ok(Outcome::Success)
        }
        Command::Poly(_) | Command::Positivity { .. } => unreachable!("handled before building a group"),
    }
}

fn verify<T: Theory>(c: &Common, args: &VerifyArgs, g: &AffineWeylGroup) -> Res<Outcome> {
    let out = Out { common: c, command: "verify" };
    let mut reports: Vec<Report> = Vec::new();
    let mut failed = false;
    let emit = |r: Report, reports: &mut Vec<Report>| -> bool {
        match &r.counterexample {
            None => out.line(format!("PASS {} (checks: {})", r.identity, r.checks)),
            Some(ce) => out.line(format!("FAIL {}: {}", r.identity, ce)),
        }
        let ok = r.passed();
        reports.push(r);
        ok
    };
    match &args.identity {
        Identity::Coproduct { max_length, variant } => {
            let loc = Localization::<T>::new(g, args.radius.unwrap_or(*max_length))?;
            let variants: &[Variant] = match variant {
                VariantArg::StructureSheaf => &[Variant::StructureSheaf],
                VariantArg::IdealSheaf => &[Variant::IdealSheaf],
                VariantArg::Both => &[Variant::StructureSheaf, Variant::IdealSheaf],
            };
            'outer: for w in g.ball(*max_length)? {
                for &v in variants {
                    if !emit(loc.verify_coproduct(&w, v)?, &mut reports) {
                        failed = true;
                        if !args.exhaust {
                            break 'outer;
                        }
                    }
                }
            }
        }
        Identity::Suite { max_length, max_translation } => {
            let mt = max_translation.unwrap_or(*max_length);
            let loc = Localization::<T>::new(g, args.radius.unwrap_or(max_length + 2 * mt))?;
            let checks: [&dyn Fn() -> affschub::Result<Report>; 5] = [
                &|| loc.check_endomorphisms(*max_length),
                &|| loc.check_commutations(*max_length, mt),
                &|| loc.check_generator_actions(*max_length),
                &|| loc.check_grassmannian_bullet(*max_length),
                &|| loc.check_cup_product(*max_length),
            ];
            for check in checks {
                if !emit(check()?, &mut reports) {
                    failed = true;
                    if !args.exhaust {
                        break;
                    }
                }
            }
        }
        Identity::Recursion { max_length, compare } => {
            let loc = Localization::<T>::new(g, args.radius.unwrap_or((*max_length).max(2 * compare)))?;
            failed = !emit(loc.recursion_closure(*max_length, *compare)?, &mut reports);
        }
        Identity::Divisor { max_translation } => {
            let loc = Localization::<T>::new(g, args.radius.unwrap_or(*max_translation))?;
            failed = !emit(loc.check_divisor_identities(*max_translation)?, &mut reports);
        }
    }
    out.document(json!({"group": group_info(g), "theory": T::KIND, "reports": reports}));
    Ok(if failed { Outcome::Counterexample } else { Outcome::Success })
}

fn sym_basis(b: BasisArg) -> SymBasis {
    match b {
        BasisArg::M => SymBasis::Monomial,
        BasisArg::H => SymBasis::Homogeneous,
        BasisArg::E => SymBasis::Elementary,
        BasisArg::S => SymBasis::Schur,
    }
}

fn poly(c: &Common, args: &crate::PolyArgs) -> Res<Outcome> {
    let out = Out { common: c, command: "poly" };
    let a = TypeA::new(args.n)?;
    let w = a.element(&args.w.0)?;
    let degree = args.degree.unwrap_or(a.group().length(&w) as u32);
    let family = args.family.to_possible_value().expect("named").get_name().to_string();
    let (text, payload) = match args.family {
        Family::AffineSchubert | Family::AffineGrothendieck => {
            let p = if args.family == Family::AffineSchubert {
                a.affine_schubert_poly(&w, degree)?
            } else {
                a.affine_grothendieck_poly(&w, degree)?
            };
            let text = match args.basis {
                Some(b) => p.to_text_in(sym_basis(b)),
                None => p.to_string(),
            };
            (text, json!({"tensor": p.to_document()}))
        }
        Family::AffineStanley | Family::StableGrothendieck => {
            let f = if args.family == Family::AffineStanley {
                a.affine_stanley(&w, degree)?
            } else {
                a.affine_stable_grothendieck(&w, degree)?
            };
            let f = f.to_basis(args.basis.map(sym_basis).unwrap_or(SymBasis::Monomial));
            (f.to_string(), json!({"symfunc": f.to_document()}))
        }
        Family::Schubert | Family::Grothendieck => {
            let p = if args.family == Family::Schubert {
                a.schubert_poly(&w)?
            } else {
                a.grothendieck_poly(&w)?
            };
            (p.to_string(), json!({"xpoly": p.to_document()}))
        }
    };
    out.line(&text);
    let mut payload = payload;
    payload["family"] = json!(family);
    payload["n"] = json!(args.n);
    payload["w"] = json!(args.w.0);
    payload["text"] = json!(text);
    out.document(payload);
    Ok(Outcome::Success)
}

fn positivity(c: &Common, n: usize, w: Option<&[usize]>, max_length: usize) -> Res<Outcome> {
    let out = Out { common: c, command: "positivity" };
    let a = TypeA::new(n)?;
    let elements: Vec<AffineWeylElement> = match w {
        Some(word) => vec![a.element(word)?],
        None => a.group().ball(max_length)?,
    };
    let mut results = Vec::new();
    let mut failed = false;
    for x in &elements {
        let word = a.group().word(x);
        let p = a.affine_schubert_poly(x, word.len() as u32)?;
        let (ok, witness) = p.monomial_positivity();
        match &witness {
            None => out.line(format!("PASS {}", display_word(&word))),
            Some(t) => out.line(format!("FAIL {}: coefficient {} of {}", display_word(&word), t.coefficient, t.label)),
        }
        failed |= !ok;
        results.push(json!({"w": word, "positive": ok, "witness": witness}));
    }
    out.document(json!({"n": n, "results": results}));
    Ok(if failed { Outcome::Counterexample } else { Outcome::Success })
}
