use crate::ols::{Column, Dataset};

pub const RESPONSE: &str = "SALES";
pub const TARGET_POPULATION: &str = "TARGTPOP";
pub const DISPOSABLE_INCOME: &str = "DISPOINC";

/// Dwaine Studios portrait sales in 21 cities (Kutner, Nachtsheim, Neter
/// and Li, *Applied Linear Statistical Models*, 5th ed., p. 237).
///
/// `TARGTPOP`: persons aged 16 or younger (thousands);
/// `DISPOINC`: per capita disposable income (thousands of dollars);
/// `SALES`: portrait studio sales (thousands of dollars).
const ROWS: [[f64; 3]; 21] = [
    [68.5, 16.7, 174.4],
    [45.2, 16.8, 164.4],
    [91.3, 18.2, 244.2],
    [47.8, 16.3, 154.6],
    [46.9, 17.3, 181.6],
    [66.1, 18.2, 207.5],
    [49.5, 15.9, 152.8],
    [52.0, 17.2, 163.2],
    [48.9, 16.6, 145.4],
    [38.4, 16.0, 137.2],
    [87.9, 18.3, 241.9],
    [72.8, 17.1, 191.1],
    [88.4, 17.4, 232.0],
    [42.9, 15.8, 145.3],
    [52.5, 17.8, 161.1],
    [85.7, 18.4, 209.7],
    [41.3, 16.5, 146.4],
    [51.7, 16.3, 144.0],
    [89.6, 18.1, 232.6],
    [82.7, 19.1, 224.1],
    [52.3, 16.0, 166.5],
];

/// The embedded Dwaine Studios dataset: `SALES` on `TARGTPOP`, `DISPOINC`.
pub fn dwaine_fixture() -> Dataset {
    let column = |i: usize| ROWS.iter().map(|r| r[i]).collect::<Vec<_>>();
    Dataset::new(
        vec![
            Column::new(TARGET_POPULATION, column(0)),
            Column::new(DISPOSABLE_INCOME, column(1)),
            Column::new(RESPONSE, column(2)),
        ],
        RESPONSE,
        &[TARGET_POPULATION, DISPOSABLE_INCOME],
    )
    .expect("embedded fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ols::{mean_center, sscp};

    #[test]
    fn fixture_checksums() {
        let d = dwaine_fixture();
        assert_eq!(d.n(), 21);
        let c = mean_center(&d).unwrap();
        let m = sscp(&c, &[RESPONSE, TARGET_POPULATION, DISPOSABLE_INCOME]).unwrap();
        let expect = [
            (RESPONSE, RESPONSE, 26_196.21),
            (TARGET_POPULATION, RESPONSE, 12_730.59),
            (TARGET_POPULATION, TARGET_POPULATION, 6_934.33),
            (DISPOSABLE_INCOME, RESPONSE, 587.04),
            (DISPOSABLE_INCOME, TARGET_POPULATION, 282.33),
            (DISPOSABLE_INCOME, DISPOSABLE_INCOME, 18.83),
        ];
        for (a, b, v) in expect {
            let got = m.get(a, b).unwrap();
            assert!((got - v).abs() <= 0.01, "{a}'{b} = {got}, want {v}");
        }
    }
}
