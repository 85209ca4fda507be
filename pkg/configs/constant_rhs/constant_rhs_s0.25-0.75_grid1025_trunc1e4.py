_base_ = ['../_base_/default_runtime.py']

# profiles u_riesz and u_spectral for the unit right-hand side
experiment = dict(
    type='ConstantRhsExperiment',
    s=[0.25, 0.5, 0.75],
    grid=1025,
    trunc=10000,
    accumulation='compensated',
    # values at x = 0 over s
    curve=dict(s_min=0.01, s_max=0.99, num=99))
output = dict(out_dir='results/constant_rhs')
