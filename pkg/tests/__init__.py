# rhneat tests package
