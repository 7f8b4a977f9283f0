k = eval(input())
m = eval(input())
b = k
k = m
m = b
print(k)
print(m)
print(k == m)
