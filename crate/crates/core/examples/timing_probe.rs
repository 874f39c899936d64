use sclcc_core::cycles::{brute_force_girth_oracle, girth};
use sclcc_core::matrix::{profile, ExponentMatrix};
use sclcc_core::search::*;
use std::time::Instant;

fn main() {
    let pc1 = ExponentMatrix::from_rows(vec![
        vec![5, 17, 6, 12, 30, 0, 7, 37, 11, 20, 2, 33, 0, 16, 0, 4, 21],
        vec![29, 0, 21, 24, 15, 34, 0, 0, 0, 0, 8, 9, 14, 0, 36, 37, 7],
        vec![0, 28, 0, 0, 0, 32, 30, 29, 0, 21, 0, 0, 37, 36, 2, 0, 0],
    ])
    .unwrap()
    .to_symbolic();
    let pc2 = ExponentMatrix::from_rows(vec![
        vec![9, 59, 30, 44, 0, 55, 0, 0, 65, 0, 21, 0, 58, 37, 24, 0, 41],
        vec![0, 67, 26, 60, 53, 0, 18, 32, 0, 59, 0, 57, 0, 0, 0, 38, 13],
        vec![5, 0, 0, 0, 9, 55, 70, 42, 27, 14, 43, 16, 68, 57, 56, 41, 0],
    ])
    .unwrap()
    .to_symbolic();
    let pc3 = ExponentMatrix::from_rows(vec![
        vec![12, 10, 9, 7, 3, 0, 0, 5, 0, 4, 1, 10],
        vec![6, 0, 0, 11, 0, 1, 11, 12, 8, 10, 0, 6],
        vec![0, 4, 10, 0, 5, 0, 4, 12, 9, 0, 11, 9],
        vec![12, 9, 5, 0, 1, 9, 10, 0, 3, 8, 12, 0],
    ])
    .unwrap()
    .to_symbolic();

    for (name, h) in [("pc1", &pc1), ("pc2", &pc2), ("pc3", &pc3)] {
        let t = Instant::now();
        let g = girth(h, 12).unwrap();
        let dt = t.elapsed();
        let prof = profile(h).unwrap();
        let t2 = Instant::now();
        let blocks = 4 * (prof.m_h as usize + 1) + 2;
        let og = brute_force_girth_oracle(h, blocks, 12).unwrap();
        println!(
            "{name}: girth {:?} in {:?} | oracle {:?} in {:?} | m_h {} v_s {}",
            g, dt, og, t2.elapsed(), prof.m_h, prof.v_s
        );
    }

    for a in [4usize, 5, 6] {
        let t = Instant::now();
        let out = exhaustive_min_mh(&SymbolicSearchSpec {
            a,
            c: 3,
            girth: 8,
            mh_range: None,
            budget: SearchBudget::default(),
        })
        .unwrap();
        println!("exhaustive g8 a={a}: value {:?} nodes {} in {:?}", out.value, out.nodes, t.elapsed());
    }

    // a=7 existence at m_h = 8 only (find-first)
    let t = Instant::now();
    let out = exhaustive_min_mh(&SymbolicSearchSpec {
        a: 7,
        c: 3,
        girth: 8,
        mh_range: Some((8, 8)),
        budget: SearchBudget { max_nodes: Some(500_000_000) },
    })
    .unwrap();
    println!("a=7 m_h=8 existence: {:?} nodes {} in {:?}", out.status, out.nodes, t.elapsed());

    // Table V: g=10, a=4 -> 11
    let t = Instant::now();
    let out = exhaustive_min_mh(&SymbolicSearchSpec {
        a: 4,
        c: 3,
        girth: 10,
        mh_range: None,
        budget: SearchBudget::default(),
    })
    .unwrap();
    println!("g10 a=4: value {:?} nodes {} in {:?}", out.value, out.nodes, t.elapsed());
}
