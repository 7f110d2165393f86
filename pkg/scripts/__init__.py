# Maintenance scripts for seifcalc
