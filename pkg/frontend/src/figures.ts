/** Declarative chart specs for the canned CSVs emitted by the simulator. */

export interface SeriesSpec {
  column: string;
  label: string;
}

export interface FigureSpec {
  csvPath: string;
  figureName: string;
  xColumn: string;
  yColumns: SeriesSpec[];
  xLabel: string;
  yLabel: string;
  outPath: string;
  /** Pull the y axis down to zero (probabilities and coefficients). */
  yIncludeZero?: boolean;
}

type CannedSpec = Omit<FigureSpec, "csvPath" | "outPath">;

const series = (column: string, label: string): SeriesSpec => ({ column, label });

export const CANNED: Record<string, CannedSpec> = {
  fig4: {
    figureName: "fig4",
    xColumn: "lambda_rn",
    xLabel: "node density (nodes/m^2)",
    yLabel: "average clustering coefficient",
    yIncludeZero: true,
    yColumns: [
      series("acc_nnr_analytic", "NNR analytic"),
      series("acc_switch_analytic", "SWITCH analytic"),
      series("acc_nnr_sim", "NNR simulated"),
      series("acc_switch_sim", "SWITCH simulated"),
    ],
  },
  fig5: {
    figureName: "fig5",
    xColumn: "lambda_rn",
    xLabel: "node density (nodes/m^2)",
    yLabel: "average path length (hops)",
    yColumns: [
      series("asl_nnr_analytic", "NNR analytic"),
      series("asl_switch_analytic", "SWITCH analytic"),
      series("asl_nnr_sim", "NNR simulated"),
      series("asl_switch_sim", "SWITCH simulated"),
    ],
  },
  fig6: {
    figureName: "fig6",
    xColumn: "epsilon",
    xLabel: "power ratio",
    yLabel: "route success probability",
    yIncludeZero: true,
    yColumns: [
      series("rho_switch_li_16000", "interferers = density/16000"),
      series("rho_switch_li_8000", "interferers = density/8000"),
      series("rho_switch_li_4000", "interferers = density/4000"),
    ],
  },
  fig7: {
    figureName: "fig7",
    xColumn: "asl",
    xLabel: "average path length (hops)",
    yLabel: "route success probability",
    yIncludeZero: true,
    yColumns: [
      series("rho_switch_li_16000", "SWITCH, density/16000"),
      series("rho_switch_li_8000", "SWITCH, density/8000"),
      series("rho_switch_li_4000", "SWITCH, density/4000"),
      series("rho_nnr_li_16000", "NNR, density/16000"),
      series("rho_nnr_li_8000", "NNR, density/8000"),
      series("rho_nnr_li_4000", "NNR, density/4000"),
    ],
  },
  fig8: {
    figureName: "fig8",
    xColumn: "asl",
    xLabel: "average path length (hops)",
    yLabel: "delay (us)",
    yColumns: [
      series("delay_switch_us_sz_55dbm", "noise -55 dBm"),
      series("delay_switch_us_sz_50dbm", "noise -50 dBm"),
      series("delay_switch_us_sz_45dbm", "noise -45 dBm"),
    ],
  },
  fig9: {
    figureName: "fig9",
    xColumn: "acc",
    xLabel: "average clustering coefficient",
    yLabel: "reliability factor",
    yIncludeZero: true,
    yColumns: [
      series("re_switch_asl10", "path length 10"),
      series("re_switch_asl20", "path length 20"),
      series("re_switch_asl30", "path length 30"),
    ],
  },
  fig10: {
    figureName: "fig10",
    xColumn: "lambda_rn",
    xLabel: "node density (nodes/m^2)",
    yLabel: "reliability factor",
    yIncludeZero: true,
    yColumns: [
      series("re_switch_sim_phi_pi3", "SWITCH sim, 60 deg"),
      series("re_nnr_sim_phi_pi3", "NNR sim, 60 deg"),
      series("re_switch_sim_phi_pi2", "SWITCH sim, 90 deg"),
      series("re_nnr_sim_phi_pi2", "NNR sim, 90 deg"),
      series("re_switch_analytic_phi_pi3", "SWITCH analytic, 60 deg"),
      series("re_nnr_analytic_phi_pi3", "NNR analytic, 60 deg"),
      series("re_switch_analytic_phi_pi2", "SWITCH analytic, 90 deg"),
      series("re_nnr_analytic_phi_pi2", "NNR analytic, 90 deg"),
    ],
  },
  fig11: {
    figureName: "fig11",
    xColumn: "lambda_rn",
    xLabel: "node density (nodes/m^2)",
    yLabel: "delay (us)",
    yColumns: [
      series("delay_switch_sim_us_phi_pi3", "SWITCH sim, 60 deg"),
      series("delay_nnr_sim_us_phi_pi3", "NNR sim, 60 deg"),
      series("delay_switch_sim_us_phi_pi2", "SWITCH sim, 90 deg"),
      series("delay_nnr_sim_us_phi_pi2", "NNR sim, 90 deg"),
      series("delay_switch_analytic_us_phi_pi3", "SWITCH analytic, 60 deg"),
      series("delay_nnr_analytic_us_phi_pi3", "NNR analytic, 60 deg"),
      series("delay_switch_analytic_us_phi_pi2", "SWITCH analytic, 90 deg"),
      series("delay_nnr_analytic_us_phi_pi2", "NNR analytic, 90 deg"),
    ],
  },
};

/** The topology export renders as a scatter, not a line chart. */
export const TOPOLOGY_NAME = "topology";

export const ALL_CANNED_NAMES = [...Object.keys(CANNED), TOPOLOGY_NAME];

export function cannedSpec(name: string, csvPath: string, outPath: string): FigureSpec {
  const spec = CANNED[name];
  if (!spec) {
    throw new Error(`unknown figure '${name}' (expected ${ALL_CANNED_NAMES.join(", ")})`);
  }
  return { ...spec, csvPath, outPath };
}
