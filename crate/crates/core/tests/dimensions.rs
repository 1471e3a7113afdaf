use adlv_core::elcharts::{cell_dimension, chart_from_type, enumerate_p};
use adlv_core::verify::chart_specs;

/// `#V_A` equals the cell dimension of the chart's cotype for every chart
/// of the grid whose Hodge point is minuscule.
#[test]
fn va_count_is_cell_dimension() {
    let mut checked = 0;
    for spec in chart_specs(3) {
        for t in enumerate_p(&spec, None).unwrap() {
            let hodge = t.dominant();
            if !hodge.is_minuscule() {
                continue;
            }
            let chart = chart_from_type(&t, &spec).unwrap();
            let dim = cell_dimension(&chart.cotype(), &hodge, &spec).unwrap();
            assert_eq!(
                chart.va_count() as i64,
                dim,
                "n={} m_vec={:?} type {:?}",
                spec.n(),
                spec.m_vec(),
                t.flat()
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 64652);
}
