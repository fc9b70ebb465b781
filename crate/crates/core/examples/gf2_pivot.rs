//! Rank, nullity and the principal pivot transform over GF(2).

use interlace::Gf2Matrix;

fn main() -> Result<(), interlace::Error> {
    // Adjacency matrix of the path a - b - c with a loop at c.
    let labels = ["a", "b", "c"].map(String::from).to_vec();
    let a = Gf2Matrix::from_rows(labels, &[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 1]])?;
    println!("A =\n{a:?}");
    for subset in [&["a", "b"][..], &["a", "c"], &["c"], &["a", "b", "c"]] {
        let (r, n) = a.rank_nullity(subset)?;
        println!("A[{}]: rank {r}, nullity {n}", subset.join(""));
    }

    let ab = a.principal_pivot_transform(&["a", "b"])?;
    println!("A*{{a,b}} =\n{ab:?}");
    assert_eq!(ab.principal_pivot_transform(&["a", "b"])?, a);
    println!("(A*{{a,b}})*{{a,b}} = A");

    match a.principal_pivot_transform(&["a"]) {
        Err(e) => println!("A*{{a}}: {e}"),
        Ok(m) => println!("A*{{a}} =\n{m:?}"),
    }

    // Partial inverse: swapping the {a,b} coordinates of (x, Ax) gives a
    // solution pair for the transform.
    let x = [true, false, true];
    let y = a.mul_vec(&x);
    let u = [y[0], y[1], x[2]];
    let v = [x[0], x[1], y[2]];
    assert_eq!(ab.mul_vec(&u), v);
    println!("x = {x:?}, Ax = {y:?}, (A*{{a,b}}) u = v holds");
    Ok(())
}
