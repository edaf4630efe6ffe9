"""Reference values frozen from a 40-digit mpmath computation of
2^-(m+1) [psi^(m)((x+1)/2) - psi^(m)(x/2)] at the exact binary arguments.

Regenerate with tests/make_oracles.py (needs mpmath).
"""

BETA = {
    (0.05, 0): 19.34583491098957,
    (0.05, 1): -399.261041507561,
    (0.05, 2): 15998.454150922491,
    (0.05, 3): -959995.3501928935,
    (0.05, 4): 76799981.7840932,
    (0.1, 0): 9.380942870328848,
    (0.1, 1): -99.3328795202648,
    (0.1, 2): 1998.665582127142,
    (0.1, 3): -59996.16066349887,
    (0.1, 4): 2399985.6174181886,
    (0.25, 0): 3.467891949359644,
    (0.25, 1): -15.496737567986907,
    (0.25, 2): 127.110594591997,
    (0.25, 3): -1533.7357833737574,
    (0.25, 4): 24568.498700803553,
    (0.3, 0): 2.825321941882868,
    (0.3, 1): -10.649637352132547,
    (0.3, 2): 73.28910410134125,
    (0.3, 3): -738.8162090791803,
    (0.3, 4): 9870.403108482566,
    (0.75, 0): 0.9749909887987221,
    (0.75, 1): -1.5390091687091474,
    (0.75, 2): 4.4378964079208965,
    (0.75, 3): -18.405949347818687,
    (0.75, 4): 99.80104805606467,
    (1.25, 0): 0.5321080506403558,
    (1.25, 1): -0.5032624320130935,
    (1.25, 2): 0.8894054080029997,
    (1.25, 3): -2.264216626242619,
    (1.25, 4): 7.501299196447121,
    (3.7, 0): 0.15280636925608637,
    (3.7, 1): -0.0457894121249276,
    (3.7, 2): 0.026976464295712252,
    (3.7, 3): -0.023491409154319035,
    (3.7, 4): 0.026936284997838796,
    (7.3, 0): 0.07314198086706919,
    (7.3, 1): -0.010645028870622016,
    (7.3, 2): 0.003083416898231008,
    (7.3, 3): -0.0013334805001198767,
    (7.3, 4): 0.0007655392671584532,
    (12.5, 0): 0.04159494383123071,
    (12.5, 1): -0.003454391977887714,
    (12.5, 2): 0.000572801488011194,
    (12.5, 3): -0.00014223689482911444,
    (12.5, 4): 4.701735012849953e-05,
    (40.0, 0): 0.012656201232748765,
    (40.0, 1): -0.00032030762631053174,
    (40.0, 2): 1.6210328743365062e-05,
    (40.0, 3): -1.230377515891364e-06,
    (40.0, 4): 1.244957686225791e-07,
}
PSI = {
    (0, 1.0): -0.5772156649015329,
    (0, 0.5): -1.9635100260214235,
    (0, 2.0): 0.42278433509846713,
    (0, 0.1): -10.423754940411076,
    (0, 9.5): 2.1977378764029494,
    (0, 123.4): 4.8113737751162775,
    (1, 0.25): 17.19732915450711,
    (1, 0.75): 2.5418796476716063,
    (2, 1.0): -2.4041138063191885,
    (3, 0.3): 743.1417646550498,
    (5, 2.2): 1.201921216126424,
    (8, 15.0): -2.542957742294163e-06,
    (14, 0.7): -18362781767246.21,
}
ETA3 = 0.9015426773696957
BETA2_HALF = 15.50313834014991
BETA_HIGH = {
    (0.5, 12): 3923978649154.5557,
    (2.0, 12): 58178.210727588455,
    (0.9, 7): -11679.458909035624,
    (30.0, 10): 1.2093594638759494e-10,
}
