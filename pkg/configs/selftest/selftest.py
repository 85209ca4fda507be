_base_ = ['../_base_/default_runtime.py']

experiment = dict(type='SelftestExperiment', table1=True)
output = dict(out_dir='results/selftest')
