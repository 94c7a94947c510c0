//! Brute-force oracles shared by the integration tests. They rebuild counts
//! from the stage-by-stage description without going through the library's
//! constructions.

use actreedy::fincat::{check_action_morphism, ActionMorphism, CatAction, FinCategory};
use actreedy::ptree::PlanarTree;

/// Objects of D_{n,k} by direct simulation of the stages on a parent array.
pub fn dad_object_count(n: u32, k: i32) -> usize {
    if k < 0 {
        return 0;
    }
    let mut parent: Vec<Option<usize>> = Vec::new();
    let mut moment: Vec<i64> = Vec::new();
    for j in 0..=k {
        parent.push(if j == 0 { None } else { Some(j as usize - 1) });
        moment.push(if j < k { -1 - j as i64 } else { 0 });
    }
    for i in 1..=n as i64 {
        let tops: Vec<usize> = (0..parent.len()).filter(|&x| moment[x] == i - 1).collect();
        for x in tops {
            let mut a = Some(x);
            while let Some(y) = a {
                parent.push(Some(y));
                moment.push(i);
                a = parent[y];
            }
        }
    }
    parent.len()
}

/// Colors and generators of O_{n,S}: every color has at most one generator,
/// the operations at a color are its identity and the concatenated
/// operations at the sources of its generator, and each stage adds one color
/// per operation at a color of the previous moment.
pub fn dao_counts(n: u32, s: &PlanarTree) -> (usize, usize) {
    let mut generator: Vec<Option<Vec<usize>>> = s.edges().map(|e| s.inputs(e).map(|i| i.to_vec())).collect();
    let mut moment: Vec<i64> = s.edges().map(|e| if e == 0 { 0 } else { -1 }).collect();
    fn ops(c: usize, generator: &[Option<Vec<usize>>]) -> Vec<Vec<usize>> {
        let mut out = vec![vec![c]];
        if let Some(srcs) = &generator[c] {
            let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
            for &x in srcs {
                let below = ops(x, generator);
                partial =
                    partial.iter().flat_map(|p| below.iter().map(move |b| [p.clone(), b.clone()].concat())).collect();
            }
            out.extend(partial);
        }
        out
    }
    for i in 1..=n as i64 {
        let tops: Vec<usize> = (0..moment.len()).filter(|&c| moment[c] == i - 1).collect();
        for c in tops {
            for op in ops(c, &generator) {
                generator.push(Some(op));
                moment.push(i);
            }
        }
    }
    let gens = generator.iter().filter(|g| g.is_some()).count();
    (generator.len(), gens)
}

pub fn functors(c: &FinCategory, d: &FinCategory) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    let total = d.num_objects().pow(c.num_objects() as u32);
    for code in 0..total {
        let obj: Vec<usize> =
            (0..c.num_objects()).map(|i| code / d.num_objects().pow(i as u32) % d.num_objects()).collect();
        let choices: Vec<Vec<usize>> = (0..c.num_arrows())
            .map(|f| (0..d.num_arrows()).filter(|&g| d.src(g) == obj[c.src(f)] && d.tgt(g) == obj[c.tgt(f)]).collect())
            .collect();
        let mut arr = vec![0; c.num_arrows()];
        let mut idx = vec![0; c.num_arrows()];
        if choices.iter().any(|v| v.is_empty()) {
            continue;
        }
        loop {
            for f in 0..c.num_arrows() {
                arr[f] = choices[f][idx[f]];
            }
            out.push((obj.clone(), arr.clone()));
            let mut f = 0;
            while f < idx.len() {
                idx[f] += 1;
                if idx[f] < choices[f].len() {
                    break;
                }
                idx[f] = 0;
                f += 1;
            }
            if f == idx.len() {
                break;
            }
        }
    }
    out
}

/// Maps of actions between two explicit finite actions, by trying every
/// pair of object and arrow assignments.
pub fn action_maps(src: &CatAction, tgt: &CatAction) -> usize {
    let acting = functors(&src.acting, &tgt.acting);
    let acted = functors(&src.acted, &tgt.acted);
    let mut count = 0;
    for (ao, aa) in &acting {
        for (bo, ba) in &acted {
            let x = ActionMorphism {
                acting_objects: ao.clone(),
                acting_arrows: aa.clone(),
                acted_objects: bo.clone(),
                acted_arrows: ba.clone(),
            };
            count += check_action_morphism(&x, src, tgt).is_ok() as usize;
        }
    }
    count
}
