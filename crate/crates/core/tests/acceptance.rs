//! One line per acceptance criterion.  Run with `--nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use atilde_core::arcs::is_exceptional_sequence;
use atilde_core::families::{
    dehn_twist_module, enumerate_collections, tau_collection, tau_transjective, tau_twist, winding_level,
    TransjectiveObject,
};
use atilde_core::homext::{dim_ext, dim_hom, euler_form};
use atilde_core::oracle::dim_hom_linear_algebra;
use atilde_core::*;
use common::*;

fn timed_count(q: &Quiver) -> (usize, Duration) {
    let t = Instant::now();
    let c = count_families(q, Execution::Parallel);
    (c, t.elapsed())
}

#[test]
fn c01_family_counts() {
    let mut tally = Tally::new("C1 family counts 8/54/352 within 1s/10s/300s");
    let mut notes = Vec::new();
    for (eps, expected, limit) in [("-++", 8, 1.0), ("-+++", 54, 10.0), ("-++++", 352, 300.0)] {
        let (c, t) = timed_count(&quiver(eps));
        notes.push(format!("{eps}={c} in {:.3}s", t.as_secs_f64()));
        tally.check(c == expected && t.as_secs_f64() < limit, || {
            format!("{eps}: got {c} (want {expected}) in {:?} (limit {limit}s)", t)
        });
    }
    tally.finish(&notes.join(", "));
}

#[test]
fn c02_orientation_independence_n3() {
    let mut tally = Tally::new("C2 all 6 orientations at n=3 give 8");
    for q in Quiver::all(3) {
        let c = count_families(&q, Execution::Parallel);
        tally.check(c == 8, || format!("{q}: {c}"));
    }
    tally.finish("");
}

#[test]
fn c03_kronecker() {
    let mut tally = Tally::new("C3 Kronecker has one family");
    for q in Quiver::all(2) {
        let c = count_families(&q, Execution::Parallel);
        tally.check(c == 1, || format!("{q}: {c}"));
    }
    tally.finish("");
}

#[test]
fn c04_rothe_quotients() {
    let mut tally = Tally::new("C4 counts / (n-1) = 4, 18, 88");
    for (eps, quotient) in [("-++", 4), ("-+++", 18), ("-++++", 88)] {
        let q = quiver(eps);
        let c = count_families(&q, Execution::Parallel);
        let d = q.n() - 1;
        tally.check(c.is_multiple_of(d) && c / d == quotient, || format!("{eps}: {c}/{d}"));
    }
    tally.finish("");
}

#[test]
fn c05_worked_example() {
    let mut tally = Tally::new("C5 five-vertex worked collection");
    let q = quiver("-+-++");
    let mods = vec![
        triple(&q, 1, 3, 0),
        triple(&q, 1, 4, 0),
        triple(&q, 1, 0, 0),
        triple(&q, 2, 0, 0),
        triple(&q, 1, 2, 1),
    ];
    let lengths: Vec<i64> = mods.iter().map(|m| m.len()).collect();
    tally.check(lengths == vec![2, 3, 4, 3, 6], || format!("lengths {lengths:?}"));
    let d = ArcDiagram::new(q.clone(), mods.clone());
    tally.check(d.is_exceptional() == Ok(true), || "diagram not exceptional".into());
    let order = d.order();
    tally.check(order.is_some(), || "no order".into());
    if let Some(order) = &order {
        tally.check(is_exceptional_sequence(&q, order), || "order fails Hom/Ext recheck".into());
    }
    let regular = mods.iter().filter(|m| m.classify(&q).is_regular()).count();
    let preproj = mods.iter().filter(|m| m.classify(&q) == StringClass::Preprojective).count();
    tally.check(regular == 3 && preproj == 2, || format!("{regular} regular, {preproj} preprojective"));
    tally.finish("3 regular + 2 preprojective");
}

#[test]
fn c06_geometric_equals_algebraic() {
    let mut tally = Tally::new("C6 geometric relation = algebraic relation");
    for q in orientations(4) {
        let corpus = exceptional_corpus(&q);
        for (a, u) in corpus.iter().enumerate() {
            for v in &corpus[a + 1..] {
                let g = pair_relation(&q, u, v).unwrap();
                let r = relation_algebraic(&q, u, v).unwrap();
                tally.check(g == r, || format!("{q} {} {}: {g:?} vs {r:?}", u.label(&q), v.label(&q)));
            }
        }
    }
    let exhaustive = tally.checked;
    let mut rng = rng(0x5eed_0006);
    for n in [5, 6] {
        let mut done = 0;
        while done < 500 {
            let q = random_quiver(&mut rng, n);
            let u = random_exceptional(&mut rng, &q);
            let v = random_exceptional(&mut rng, &q);
            if u == v {
                continue;
            }
            done += 1;
            let g = pair_relation(&q, &u, &v).unwrap();
            let r = relation_algebraic(&q, &u, &v).unwrap();
            tally.check(g == r, || format!("{q} {} {}: {g:?} vs {r:?}", u.label(&q), v.label(&q)));
        }
    }
    tally.finish(&format!("{exhaustive} exhaustive pairs + 1000 random"));
}

#[test]
fn c07_graph_maps_vs_linear_algebra() {
    let mut tally = Tally::new("C7 graph-map Hom = linear-algebra Hom");
    for q in orientations(4) {
        let corpus = strings(&q);
        for u in &corpus {
            for v in &corpus {
                let g = dim_hom(&q, u, v);
                let o = dim_hom_linear_algebra(&q, u, v);
                tally.check(g == o, || format!("{q} {} {}: {g} vs {o}", u.label(&q), v.label(&q)));
            }
        }
    }
    tally.finish("all strings k <= 4n, n <= 4");
}

#[test]
fn c08_euler_and_auslander_reiten() {
    let mut tally = Tally::new("C8 Euler identity and Ext(M,N) = Hom(N, tau M)");
    for q in orientations(4) {
        let corpus = strings(&q);
        for u in &corpus {
            let du = u.dimension_vector(&q);
            let tau_u = u.tau(&q);
            for v in &corpus {
                let dv = v.dimension_vector(&q);
                let hom = dim_hom(&q, u, v) as i64;
                let ext = dim_ext(&q, u, v);
                let e = euler_form(&q, &du, &dv);
                tally.check(hom - ext as i64 == e, || {
                    format!("{q} {} {}: hom {hom} ext {ext} euler {e}", u.label(&q), v.label(&q))
                });
                let ar = match tau_u {
                    Some(t) => dim_hom_linear_algebra(&q, v, &t),
                    None => 0,
                };
                tally.check(ext == ar, || {
                    format!("{q} {} {}: ext {ext} vs hom(N, tau M) {ar}", u.label(&q), v.label(&q))
                });
            }
        }
    }
    tally.finish("all strings k <= 4n, n <= 4");
}

#[test]
fn c09_tube_dimensions() {
    let mut tally = Tally::new("C9 regular End = k+1 and Ext = k from quasi-length");
    for q in orientations(4) {
        for m in StringModule::all_up_to(&q, 3 * q.n() as i64) {
            let Some(boundary) = m.tube_boundary(&q) else { continue };
            let r = q.count_on(boundary) as u32;
            let rl = m.quasi_length(&q).unwrap();
            // k r < rl <= (k+1) r
            let k = rl.div_ceil(r) - 1;
            let end = dim_hom(&q, &m, &m) as u32;
            let ext = dim_ext(&q, &m, &m) as u32;
            tally.check(end == k + 1 && ext == k, || {
                format!("{q} {}: r={r} rl={rl} k={k}: End={end} Ext={ext}", m.label(&q))
            });
        }
    }
    tally.finish("");
}

#[test]
fn c10_tau_as_twists() {
    let mut tally = Tally::new("C10 outer-cw then inner-ccw twist = tau");
    for q in orientations(4) {
        let members: Vec<StringModule> =
            exceptional_corpus(&q).into_iter().filter(|m| !m.is_projective(&q)).collect();
        let twisted = tau_collection(&q, &members).unwrap();
        for (m, t) in members.iter().zip(&twisted) {
            tally.check(m.tau(&q) == Some(*t), || format!("{q} {}", m.label(&q)));
        }
        for v in 0..q.n() {
            let p = StringModule::projective(&q, v).unwrap();
            let image = tau_transjective(&q, &TransjectiveObject::of(&q, p).unwrap());
            let inj = StringModule::injective(&q, v).unwrap();
            tally.check(image.module == inj && image.shift == -1, || format!("{q} P({v})"));
        }
    }
    let mut rng = rng(0x5eed_0010);
    let mut done = 0;
    while done < 100 {
        let q = random_quiver(&mut rng, 5 + done % 2);
        let m = random_exceptional(&mut rng, &q);
        if m.is_projective(&q) {
            continue;
        }
        done += 1;
        tally.check(m.tau(&q) == Some(tau_twist(&q, &m)), || format!("{q} {}", m.label(&q)));
    }
    tally.finish("corpus n <= 4 plus 100 random at n = 5, 6");
}

#[test]
fn c11_twist_algebra() {
    let mut tally = Tally::new("C11 Dehn twist algebra");
    for q in orientations(4) {
        for m in strings(&q) {
            let cw = dehn_twist_module(&q, &m, TwistDirection::Cw);
            tally.check(dehn_twist_module(&q, &cw, TwistDirection::Ccw) == m, || format!("{q} {}", m.label(&q)));
            let mut step = m;
            for _ in 0..q.inner_count() {
                step = elementary_twist(&q, &step, Boundary::Inner, TwistDirection::Cw);
            }
            tally.check(step == cw, || format!("{q} {}: p-fold inner twist", m.label(&q)));
        }
        for d in enumerate_collections(&q, 2, Execution::Parallel) {
            for dir in [TwistDirection::Cw, TwistDirection::Ccw] {
                let t = dehn_twist(&d, dir);
                tally.check(t.is_exceptional() == Ok(true), || format!("{q} {:?} {dir:?}", d.modules));
            }
        }
    }
    tally.finish("");
}

#[test]
fn c12_winding_bounds() {
    let mut tally = Tally::new("C12 winding-number bounds");
    for q in orientations(4) {
        for d in enumerate_collections(&q, 2, Execution::Parallel) {
            let classes: Vec<StringClass> = d.modules.iter().map(|m| m.classify(&q)).collect();
            let arcs = d.arcs();
            let both = classes.contains(&StringClass::Preprojective) && classes.contains(&StringClass::Preinjective);
            if both {
                tally.check(arcs.iter().all(|a| a.lambda == 0), || format!("{q} {arcs:?}"));
            }
            for class in [StringClass::Preprojective, StringClass::Preinjective] {
                let ws: Vec<i64> = d
                    .modules
                    .iter()
                    .filter(|m| m.classify(&q) == class)
                    .map(|m| winding_level(&q, m).unwrap())
                    .collect();
                if let (Some(lo), Some(hi)) = (ws.iter().min(), ws.iter().max()) {
                    tally.check(hi - lo <= 1, || format!("{q} {class:?} spread {ws:?}"));
                }
            }
        }
    }
    tally.finish("");
}
