_base_ = ['../_base_/default_runtime.py']

experiment = dict(
    type='DiracExperiment',
    dim=2,
    s=[0.5, 0.6, 0.75],
    grid=100,
    trunc=2048,
    count=500,
    accumulation='compensated')
output = dict(out_dir='results/dirac')
nproc = 3
