use sclcc_core::cycles::{brute_force_girth_oracle, cycle_spectrum, type1_girth_test};
use sclcc_core::matrix::ExponentMatrix;
use sclcc_core::search::*;

fn main() {
    let pc2 = ExponentMatrix::from_rows(vec![
        vec![9, 59, 30, 44, 0, 55, 0, 0, 65, 0, 21, 0, 58, 37, 24, 0, 41],
        vec![0, 67, 26, 60, 53, 0, 18, 32, 0, 59, 0, 57, 0, 0, 0, 38, 13],
        vec![5, 0, 0, 0, 9, 55, 70, 42, 27, 14, 43, 16, 68, 57, 56, 41, 0],
    ])
    .unwrap();
    // Independent route 3: delta-domain tests.
    println!("pc2 rcc (g>=6): {:?}", type1_girth_test(&pc2, 6));
    println!("pc2 g>=8 test:  {:?}", type1_girth_test(&pc2, 8));
    println!("pc2 g>=10 test: {:?}", type1_girth_test(&pc2, 10));
    // Manual 6-cycle scan: dp0[j1]+dp1[j2] == dp2[j3] over distinct triples.
    let a = 17;
    let dp0: Vec<i64> = (0..a).map(|j| pc2.get(1, j) as i64 - pc2.get(0, j) as i64).collect();
    let dp1: Vec<i64> = (0..a).map(|j| pc2.get(2, j) as i64 - pc2.get(1, j) as i64).collect();
    let dp2: Vec<i64> = (0..a).map(|j| pc2.get(2, j) as i64 - pc2.get(0, j) as i64).collect();
    let mut six = 0;
    for j1 in 0..a {
        for j2 in 0..a {
            if j2 == j1 { continue; }
            for j3 in 0..a {
                if j3 == j1 || j3 == j2 { continue; }
                if dp0[j1] + dp1[j2] == dp2[j3] { six += 1; }
            }
        }
    }
    println!("pc2 six-cycle equation hits: {six}");
    let spectrum = cycle_spectrum(&pc2.to_symbolic(), 8).unwrap();
    for (l, n) in spectrum.iter() {
        println!("pc2 spectrum[{l}] = {n}");
    }
    // First 7 columns claim: no length-8 cycles.
    let pc2_7 = pc2.to_symbolic().take_columns(7).unwrap();
    let s7 = cycle_spectrum(&pc2_7, 10).unwrap();
    println!("pc2 first 7 cols spectrum: {:?}", s7.iter().collect::<Vec<_>>());

    // g10 a=4 witness from exhaustive search.
    let out = exhaustive_min_mh(&SymbolicSearchSpec {
        a: 4, c: 3, girth: 10, mh_range: None, budget: SearchBudget::default(),
    }).unwrap();
    let w = out.witness.unwrap();
    println!("g10 a=4 minimal m_h: {:?}", out.value);
    for i in 0..3 {
        println!("  row {i}: {:?}", (0..4).map(|j| w.get(i, j)).collect::<Vec<_>>());
    }
    let h = w.to_symbolic();
    let blocks = 4 * (h.max_exponent().unwrap() as usize + 1) + 2;
    println!("witness oracle girth: {:?}", brute_force_girth_oracle(&h, blocks, 12));
    println!("witness g>=10 delta test: {:?}", type1_girth_test(&w, 10));
}
