a = [1]
b = a
c = [1]
print(a is b)
print(a is c)
print(a == c)
print(a != c)
