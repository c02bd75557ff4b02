#pragma once

// Generated by tests/oracles/oracle.py; do not edit.

namespace oracle {

inline constexpr double omega_0 = 3.9224085074320711e+15;
inline constexpr double lambda_0_nm = 4.8022829945931497e+2;
inline constexpr double eta = 1.7894199395219302e+14;
inline constexpr double mu_mnp = 3.8862638880916043e-26;
inline constexpr double gamma_nr = 2.734814335275322e+13;
inline constexpr double gamma_r_dipole = 6.635490715798413e+14;
inline constexpr double gamma_0_dipole = 6.9089721493259452e+14;
inline constexpr double gamma_0_matched = 7.1730870633746722e+13;
inline constexpr double gamma_r_matched = 4.4382727280993502e+13;
inline constexpr double g = 2.9886605077950466e+12;
inline constexpr double kappa = 1.1849936488389671e+14;
inline constexpr double mu_qd = 3.204353268e-28;
inline constexpr double gap_um_n1 = 1.2e-1;
inline constexpr double gap_um_n2 = 2.1e-1;
inline constexpr double gap_um_n3 = 3.0e-1;
inline constexpr double omega_m_over_gamma_0_at_80 = 9.6000000000000002e-2;

inline constexpr double k3_kappa = 0.7;
inline constexpr double k3_delta_re = 0.3;
inline constexpr double k3_delta_im = 0.4;
inline constexpr double k3_00_re = 4.9655639607090435e-1;
inline constexpr double k3_00_im = 1.3277633510217907e-1;
inline constexpr double k3_01_re = -2.307779157728351e-1;
inline constexpr double k3_01_im = 2.9163373602800058e-1;
inline constexpr double k3_02_re = -5.0344360392909548e-1;
inline constexpr double k3_02_im = 1.3277633510217912e-1;
inline constexpr double k3_11_re = -6.8872078581912631e-3;
inline constexpr double k3_11_im = 2.6555267020435819e-1;

inline constexpr double G_n1 = 0.0;
inline constexpr double Gamma_n1 = 4.980891240793905e+11;
inline constexpr double gamma_tilde_n1 = 4.9871744261010846e+11;
inline constexpr double dw_tilde_n1 = 0.0;
inline constexpr double G_n2 = -6.9051250476357666e+10;
inline constexpr double Gamma_n2 = 0.0;
inline constexpr double gamma_tilde_n2 = 4.2426908083252762e+10;
inline constexpr double dw_tilde_n2 = 0.0;
inline constexpr double G_n3 = 0.0;
inline constexpr double Gamma_n3 = -2.3813725556567621e+11;
inline constexpr double gamma_tilde_n3 = 2.6058018704443231e+11;
inline constexpr double dw_tilde_n3 = 0.0;
inline constexpr double G_n4 = 5.8740870697977585e+10;
inline constexpr double Gamma_n4 = 0.0;
inline constexpr double gamma_tilde_n4 = 7.5000440647428024e+10;
inline constexpr double dw_tilde_n4 = 0.0;
inline constexpr double G_n5 = 0.0;
inline constexpr double Gamma_n5 = 1.4759016878097397e+11;
inline constexpr double gamma_tilde_n5 = 1.9001707686422678e+11;
inline constexpr double dw_tilde_n5 = 0.0;

inline constexpr double C_eff_n1_anti = 8.9747157751941586e-1;
inline constexpr double C_eff_n2_sym = 3.5039992701438477e-1;
inline constexpr double C_eff_n3_res = 4.0481151813616839e-1;
inline constexpr double C_eff_n5_pi = 2.8206174033029852e-1;
inline constexpr double C_eff_n4_sym = 2.2242510876981514e-1;

inline constexpr double C_full_n1_N3 = 8.9785314286639439e-1;
inline constexpr double rho11_full_n1_N3 = 4.6319653188052956e-1;
inline constexpr double C_full_n1_N4 = 8.9791959088389073e-1;
inline constexpr double rho11_full_n1_N4 = 4.6321194609379718e-1;
inline constexpr double C_full_n2_N3 = 3.4996545589183592e-1;
inline constexpr double rho11_full_n2_N3 = 1.8996668418492141e-1;

inline constexpr double C_general_state = 1.5108467120599459e-1;
inline constexpr double C_werner_200 = 0.0;
inline constexpr double C_werner_333 = 0.0;
inline constexpr double C_werner_500 = 2.4999999999999989e-1;
inline constexpr double C_werner_800 = 6.9999999999999973e-1;
inline constexpr double C_werner_1000 = 9.9999999999999956e-1;

}  // namespace oracle

