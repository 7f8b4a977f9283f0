b = eval(input())
m = eval(input())
s = b
b = m
m = s
print(b)
print(m)
print(b == m)
