//! Several cells sharing one donor: frequency slots plus spatial reuse.

use mmwb::multiplex::{allocate, default_min_separation, Allocation, CellRequest};
use mmwb::units::{BandwidthHz, Passband};

fn main() -> mmwb::Result<()> {
    let bw = BandwidthHz::mhz(20.0)?;
    let cells = [("north", 0.0), ("north-east", 8.0), ("east", 90.0), ("south", 180.0), ("south-2", 186.0), ("west", 270.0)];
    let requests = cells
        .iter()
        .map(|(id, az)| CellRequest::new(*id, bw, *az))
        .collect::<mmwb::Result<Vec<_>>>()?;

    let min_sep = default_min_separation(10.0);
    match allocate(&requests, &Passband::from_hz(38e9, 40e9)?, 5e6, min_sep)? {
        Allocation::Feasible(plan) => {
            println!("{} cells, {} slots, min separation {min_sep} deg", requests.len(), plan.slots_used());
            print!("{}", plan.to_csv());
        }
        Allocation::Infeasible { slots_needed, capacity } => println!("needs {slots_needed} slots, band holds {capacity}"),
    }

    // 40 MHz holds a single 20 MHz slot once the guard is counted
    let narrow = Passband::from_hz(38e9, 38.04e9)?;
    if let Allocation::Infeasible { slots_needed, capacity } = allocate(&requests, &narrow, 5e6, min_sep)? {
        println!("40 MHz band: needs {slots_needed} slots, holds {capacity}");
    }
    Ok(())
}
